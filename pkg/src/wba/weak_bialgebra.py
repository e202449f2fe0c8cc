"""Weak bialgebras, weak Hopf algebras, their axioms and canonical subalgebras."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..algebra.constructors import opposite
from ..algebra.structure import FinDimAlgebra
from ..errors import DimensionMismatch
from ..linalg.matrix import Matrix
from ..linalg.rational import Scalar
from ..linalg.subspace import Subspace, image
from ..linalg.tensor import reshape
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport
from .coalgebra import Coalgebra, LegTensor, check_coalgebra

logger = logging.getLogger(__name__)


class WeakBialgebra:
    """An algebra and a coalgebra on the same space."""

    def __init__(self, algebra: FinDimAlgebra, coalgebra: Coalgebra, name: Optional[str] = None):
        if algebra.dim != coalgebra.dim:
            raise DimensionMismatch(f"Algebra of dimension {algebra.dim} with coalgebra of dimension {coalgebra.dim}")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.name = name or algebra.name
        self._counit_gram: Optional[Matrix] = None
        self._unit_delta: Optional[SparseVector] = None

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def delta(self) -> Matrix:
        return self.coalgebra.delta

    @property
    def epsilon(self):
        return self.coalgebra.epsilon

    def comultiply(self, v: Dict[int, Scalar]) -> SparseVector:
        return self.coalgebra.comultiply(v)

    def counit(self, v: Dict[int, Scalar]) -> Scalar:
        return self.coalgebra.counit(v)

    def delta_one(self) -> SparseVector:
        """Flat vector of Delta(1)."""
        if self._unit_delta is None:
            self._unit_delta = self.coalgebra.comultiply(self.algebra.unit_sparse())
        return self._unit_delta

    def counit_gram(self) -> Matrix:
        """E[x][p] = epsilon(e_x e_p)."""
        if self._counit_gram is None:
            n = self.dim
            data = {}
            for x in range(n):
                row = {p: self.counit(self.algebra.product(x, p)) for p in range(n)}
                data[x] = row
            self._counit_gram = Matrix(n, n, data)
        return self._counit_gram

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeakBialgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.coalgebra == other.coalgebra

    def __hash__(self) -> int:
        return hash((self.algebra, self.coalgebra))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, dim={self.dim})"


class WeakHopfAlgebra(WeakBialgebra):
    """Weak bialgebra with an antipode matrix S."""

    def __init__(self, algebra: FinDimAlgebra, coalgebra: Coalgebra, antipode: Matrix, name: Optional[str] = None):
        super().__init__(algebra, coalgebra, name=name)
        if antipode.shape != (algebra.dim, algebra.dim):
            raise DimensionMismatch(f"Antipode of shape {antipode.shape} in dimension {algebra.dim}")
        self.antipode = antipode

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeakBialgebra):
            return NotImplemented
        same = super().__eq__(other)
        if isinstance(other, WeakHopfAlgebra):
            return bool(same) and self.antipode == other.antipode
        return bool(same)

    def __hash__(self) -> int:
        return hash((self.algebra, self.coalgebra, self.antipode))


def _three_leg_units(wba: WeakBialgebra) -> Tuple[LegTensor, LegTensor, LegTensor]:
    """(Delta(1) (x) 1)(1 (x) Delta(1)), Delta^2(1) and (1 (x) Delta(1))(Delta(1) (x) 1)."""
    algebra = wba.algebra
    n = wba.dim
    pairs = {divmod(flat, n): c for flat, c in wba.delta_one().items()}
    left_first: LegTensor = {}
    right_first: LegTensor = {}
    for (a, b), c in pairs.items():
        for (a2, b2), c2 in pairs.items():
            for k, d in algebra.product(b, a2).items():
                accumulate(left_first, (a, k, b2), c * c2 * d)
            for k, d in algebra.product(a, b2).items():
                accumulate(right_first, (a2, k, b), c * c2 * d)
    iterated = wba.coalgebra.iterate(algebra.unit_sparse())
    return left_first, iterated, right_first


def _first_difference(difference: Matrix) -> Optional[Tuple[int, int]]:
    for i, j, _ in difference.nonzero():
        return (i, j)
    return None


def check_wba(wba: WeakBialgebra) -> CheckReport:
    """
    Verify the weak bialgebra axioms as exact identities.

    Clauses: the coalgebra axioms, multiplicativity of Delta, both weak multiplicativity
    identities of epsilon and both weak comultiplicativity identities of the unit.
    """
    report = CheckReport(subject=f"weak bialgebra {wba.name}")
    algebra = wba.algebra
    n = wba.dim
    check_coalgebra(wba.coalgebra, report)

    failing = []
    for i in range(n):
        delta_i = wba.coalgebra.delta_of(i)
        for j in range(n):
            lhs = wba.comultiply(algebra.product(i, j))
            rhs = algebra.multiply_tensors(delta_i, wba.coalgebra.delta_of(j))
            if lhs != rhs:
                failing.append((i, j))
    report.expect("comultiplication is multiplicative", not failing, failing[0] if failing else None, violations=len(failing))

    gram = wba.counit_gram()
    witness_delta = None
    witness_opposite = None
    count_delta = 0
    count_opposite = 0
    for y in range(n):
        lhs = algebra.right_matrix({y: 1}).transpose() @ gram
        shape = reshape(wba.coalgebra.delta_of(y), n, n)
        with_delta = gram @ shape @ gram
        with_opposite = gram @ shape.transpose() @ gram
        position = _first_difference(lhs - with_delta)
        if position is not None:
            count_delta += 1
            witness_delta = witness_delta or [position[0], y, position[1]]
        position = _first_difference(lhs - with_opposite)
        if position is not None:
            count_opposite += 1
            witness_opposite = witness_opposite or [position[0], y, position[1]]
    report.expect(
        "counit weakly multiplicative (comultiplication)", count_delta == 0, witness_delta, detail="eps(xyz) = eps(x y1) eps(y2 z)", violations=count_delta
    )
    report.expect(
        "counit weakly multiplicative (opposite comultiplication)",
        count_opposite == 0,
        witness_opposite,
        detail="eps(xyz) = eps(x y2) eps(y1 z)",
        violations=count_opposite,
    )

    left_first, iterated, right_first = _three_leg_units(wba)
    report.expect("unit weakly comultiplicative (multiplication)", left_first == iterated, detail="(Delta(1) (x) 1)(1 (x) Delta(1)) = Delta^2(1)")
    report.expect("unit weakly comultiplicative (opposite multiplication)", right_first == iterated, detail="(1 (x) Delta(1))(Delta(1) (x) 1) = Delta^2(1)")
    logger.info(f"Weak bialgebra axioms for {wba.name}: {'pass' if report.passed else 'FAIL'}")
    return report


def is_ordinary_bialgebra(wba: WeakBialgebra) -> bool:
    """Delta(1) = 1 (x) 1."""
    unit = wba.algebra.unit_sparse()
    n = wba.dim
    one_one = {i * n + j: a * b for i, a in unit.items() for j, b in unit.items()}
    return wba.delta_one() == one_one


@dataclass(frozen=True)
class CanonicalSubalgebras:
    """L and R with the projections onto them and the target maps, all as maps on W."""

    L: Subspace
    R: Subspace
    piL: Matrix
    piR: Matrix
    tL: Matrix
    tR: Matrix


def canonical_subalgebras(wba: WeakBialgebra) -> CanonicalSubalgebras:
    """
    Pi^L(w) = eps(1_1 w) 1_2, Pi^R(w) = 1_1 eps(w 1_2), t^L(l) = 1_1 eps(1_2 l),
    t^R(r) = eps(r 1_1) 1_2, computed from Delta(1) and the counit Gram matrix.
    """
    n = wba.dim
    unit_shape = reshape(wba.delta_one(), n, n)
    gram = wba.counit_gram()
    piL = unit_shape.transpose() @ gram
    piR = unit_shape @ gram.transpose()
    tL = unit_shape @ gram
    tR = unit_shape.transpose() @ gram.transpose()
    result = CanonicalSubalgebras(L=image(piL), R=image(piR), piL=piL, piR=piR, tL=tL, tR=tR)
    logger.debug(f"Canonical subalgebras of {wba.name}: dim L = {result.L.dim}, dim R = {result.R.dim}")
    return result


def left_leg_span(wba: WeakBialgebra) -> Subspace:
    """Span of the first legs of Delta(1); equals R for a weak bialgebra."""
    n = wba.dim
    return Subspace.column_space(reshape(wba.delta_one(), n, n))


def right_leg_span(wba: WeakBialgebra) -> Subspace:
    """Span of the second legs of Delta(1); equals L for a weak bialgebra."""
    n = wba.dim
    return Subspace.row_space(reshape(wba.delta_one(), n, n))


def check_canonical_subalgebras(wba: WeakBialgebra, canonical: Optional[CanonicalSubalgebras] = None) -> CheckReport:
    """Idempotence of the projections, [L, R] = 0, and Delta(l) = (l (x) 1) Delta(1) on L."""
    canonical = canonical or canonical_subalgebras(wba)
    algebra = wba.algebra
    report = CheckReport(subject=f"canonical subalgebras of {wba.name}")
    report.expect("Pi^L idempotent", canonical.piL @ canonical.piL == canonical.piL)
    report.expect("Pi^R idempotent", canonical.piR @ canonical.piR == canonical.piR)
    report.expect("L is the right-leg span of Delta(1)", canonical.L == right_leg_span(wba))
    report.expect("R is the left-leg span of Delta(1)", canonical.R == left_leg_span(wba))

    witness = None
    for a in range(canonical.L.dim):
        l = dict(canonical.L.basis.row_items(a))
        for b in range(canonical.R.dim):
            r = dict(canonical.R.basis.row_items(b))
            if witness is None and algebra.multiply_sparse(l, r) != algebra.multiply_sparse(r, l):
                witness = [a, b]
    report.expect("L commutes with R", witness is None, witness)

    n = wba.dim
    unit = algebra.unit_sparse()
    witness = None
    for a in range(canonical.L.dim):
        l = dict(canonical.L.basis.row_items(a))
        l_one = {i * n + j: c * d for i, c in l.items() for j, d in unit.items()}
        if witness is None and wba.comultiply(l) != algebra.multiply_tensors(l_one, wba.delta_one()):
            witness = a
    report.expect("Delta(l) = (l (x) 1) Delta(1) on L", witness is None, witness)
    report.record("dim L", canonical.L.dim)
    report.record("dim R", canonical.R.dim)
    return report


def opposite_coopposite(wba: WeakBialgebra) -> WeakBialgebra:
    """Opposite multiplication with the flipped comultiplication; the antipode is kept."""
    algebra = opposite(wba.algebra)
    coalgebra = wba.coalgebra.flipped()
    name = f"{wba.name}^op,cop"
    if isinstance(wba, WeakHopfAlgebra):
        return WeakHopfAlgebra(algebra, coalgebra, wba.antipode, name=name)
    return WeakBialgebra(algebra, coalgebra, name=name)
