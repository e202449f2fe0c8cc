"""Module-algebra actions of weak bialgebras and their invariants."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..algebra.operations import is_subalgebra
from ..algebra.structure import FinDimAlgebra
from ..errors import ConsistencyError, DimensionMismatch
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace, kernel
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport
from ..wba.weak_bialgebra import CanonicalSubalgebras, WeakBialgebra, canonical_subalgebras

logger = logging.getLogger(__name__)


@dataclass
class ModuleAlgebraAction:
    """
    w > m stored as a (dim M x dim W * dim M) matrix; column w * dim M + k is w > e_k.
    """

    wba: WeakBialgebra
    module: FinDimAlgebra
    matrix: Matrix
    _operators: List[Matrix] = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.module.dim
        if self.matrix.shape != (m, self.wba.dim * m):
            raise DimensionMismatch(f"Action matrix {self.matrix.shape} for {self.wba.name} on {self.module.name}")
        columns = self.matrix.sparse_columns()
        self._operators = [
            Matrix.from_sparse_columns(columns[w * m:(w + 1) * m], m) for w in range(self.wba.dim)
        ]

    @classmethod
    def from_operators(cls, wba: WeakBialgebra, module: FinDimAlgebra, operators: List[Matrix]) -> "ModuleAlgebraAction":
        """Assemble from the operator m -> e_w > m of every basis vector."""
        if len(operators) != wba.dim:
            raise DimensionMismatch(f"{len(operators)} operators for {wba.name} of dimension {wba.dim}")
        return cls(wba, module, Matrix.hstack(*operators))

    def operator(self, w: SparseVector) -> Matrix:
        """Matrix of m -> w > m."""
        m = self.module.dim
        result = Matrix.zeros(m, m)
        for index, c in w.items():
            result = result + self._operators[index].scale(c)
        return result

    def basis_operator(self, w: int) -> Matrix:
        return self._operators[w]

    def act(self, w: SparseVector, m: SparseVector) -> SparseVector:
        result: SparseVector = {}
        for index, c in w.items():
            for k, d in self._operators[index].apply_sparse(m).items():
                accumulate(result, k, c * d)
        return result


def check_module_algebra_action(
    action: ModuleAlgebraAction, canonical: Optional[CanonicalSubalgebras] = None
) -> CheckReport:
    """
    Module axioms plus w > (m m') = (w1 > m)(w2 > m') and w > 1 = Pi^L(w) > 1.
    """
    wba = action.wba
    module = action.module
    algebra = wba.algebra
    m = module.dim
    canonical = canonical or canonical_subalgebras(wba)
    report = CheckReport(subject=f"action of {wba.name} on {module.name}")

    failing = []
    for i in range(wba.dim):
        for j in range(wba.dim):
            if action.operator(algebra.product(i, j)) != action.basis_operator(i) @ action.basis_operator(j):
                failing.append([i, j])
    report.expect("(w w') > m = w > (w' > m)", not failing, failing[0] if failing else None, violations=len(failing))
    report.expect("1 > m = m", action.operator(algebra.unit_sparse()).is_identity())

    witness = None
    violations = 0
    for w in range(wba.dim):
        pairs = wba.coalgebra.pairs_of(w)
        images = {index: action.basis_operator(index).sparse_columns() for pair in pairs for index in pair}
        for k in range(m):
            for l in range(m):
                lhs = action.basis_operator(w).apply_sparse(module.product(k, l))
                rhs: SparseVector = {}
                for (a, b), c in pairs.items():
                    for p, d in module.multiply_sparse(images[a][k], images[b][l]).items():
                        accumulate(rhs, p, c * d)
                if lhs != rhs:
                    violations += 1
                    if witness is None:
                        witness = [w, k, l]
    report.expect("w > (m m') = (w1 > m)(w2 > m')", violations == 0, witness, violations=violations)

    unit = module.unit_sparse()
    witness = None
    for w in range(wba.dim):
        projected = canonical.piL.sparse_column(w)
        if witness is None and action.act({w: 1}, unit) != action.act(projected, unit):
            witness = w
    report.expect("w > 1 = Pi^L(w) > 1", witness is None, witness)
    logger.debug(f"Module-algebra check for {wba.name} on {module.name}: {'pass' if report.passed else 'fail'}")
    return report


def invariants(action: ModuleAlgebraAction, canonical: Optional[CanonicalSubalgebras] = None) -> Subspace:
    """
    {m : w > m = (Pi^L(w) > 1) m for every basis w}.

    Raises:
        ConsistencyError: the result is not a unital subalgebra
    """
    wba = action.wba
    module = action.module
    canonical = canonical or canonical_subalgebras(wba)
    unit = module.unit_sparse()
    blocks = []
    for w in range(wba.dim):
        scalar = action.act(canonical.piL.sparse_column(w), unit)
        blocks.append(action.basis_operator(w) - module.left_matrix(scalar))
    result = kernel(Matrix.vstack(*blocks))
    if not is_subalgebra(module, result):
        raise ConsistencyError(f"Invariants of {wba.name} in {module.name} are not a unital subalgebra")
    logger.info(f"Invariants of {wba.name} acting on {module.name}: dimension {result.dim}")
    return result
