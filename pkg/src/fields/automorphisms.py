"""Algebra automorphisms of a number field: numeric root isolation, integer relations, exact check."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mpmath import im, mpf, pi, polyroots, pslq, re, workprec
from mpmath.libmp import NoConvergence
from sympy.polys.domains import QQ

from ..algebra.maps import AlgebraMap
from ..algebra.structure import Element
from ..errors import ConsistencyError, InvalidPolynomial, PrecisionExhausted
from ..linalg.matrix import Matrix
from ..linalg.rational import ZERO
from ..linalg.subspace import rank
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport
from ..wba.weak_bialgebra import WeakBialgebra
from .number_field import NumberField
from .universal import flatten_operator

logger = logging.getLogger(__name__)


# mpmath refuses integer relation searches below double precision
MIN_PRECISION_BITS = 53


@dataclass(frozen=True)
class AutomorphismSettings:
    """Numeric stage parameters; only exactly verified roots are ever returned."""

    precision_bits: int = 256
    max_precision_bits: int = 4096
    max_coefficient: int = 10**6
    max_steps: int = 10**4

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be at least {MIN_PRECISION_BITS}, got {self.precision_bits}")


def evaluate(field: NumberField, z: SparseVector) -> SparseVector:
    """p(z) in E."""
    algebra = field.algebra
    result: SparseVector = {}
    power = algebra.unit_sparse()
    for k, c in enumerate(field.coefficients()):
        if k:
            power = algebra.multiply_sparse(power, z)
        if c:
            for i, d in power.items():
                accumulate(result, i, c * d)
    return result


def substitution_map(field: NumberField, z: SparseVector) -> AlgebraMap:
    """The algebra endomorphism x -> z; column k is z^k."""
    algebra = field.algebra
    columns = [algebra.unit_sparse()]
    for _ in range(1, field.degree):
        columns.append(algebra.multiply_sparse(columns[-1], z))
    matrix = Matrix.from_sparse_columns(columns, field.degree)
    label = " + ".join(f"{c}*{algebra.label(i)}" for i, c in sorted(z.items())) or "0"
    return AlgebraMap(algebra, algebra, matrix, name=f"x -> {label}")


def _embedding(roots: Sequence) -> Tuple[object, bool]:
    """Prefer a real root of p as the embedding of x."""
    for root in roots:
        if im(root) == 0:
            return root, True
    return roots[0], False


def _as_real(value, real: bool):
    if real:
        return re(value)
    return re(value) + pi * im(value)


def _candidate(field: NumberField, alpha, beta, real: bool, settings: AutomorphismSettings) -> Tuple[str, Optional[SparseVector]]:
    """
    Coordinates of z with z(alpha) = beta from an integer relation.

    Returns:
        ("verified", z), ("absent", None) when no relation below max_coefficient exists,
        or ("failed", None) when the relation found is not an exact root of p
    """
    n = field.degree
    powers = [mpf(1)]
    for _ in range(1, n):
        powers.append(powers[-1] * alpha)
    vector = [_as_real(beta, real)] + [_as_real(p, real) for p in powers]
    relation = pslq(vector, maxcoeff=settings.max_coefficient, maxsteps=settings.max_steps)
    if relation is None:
        return "absent", None
    if relation[0] == 0:
        return "failed", None
    z = {k: QQ(-relation[k + 1], relation[0]) for k in range(n) if relation[k + 1]}
    if evaluate(field, z):
        return "failed", None
    return "verified", z


@dataclass
class AutomorphismSearch:
    """Verified automorphisms together with how far the numeric search went."""

    maps: List[AlgebraMap]
    bits: int
    max_coefficient: int
    unmatched: int = 0

    @property
    def complete(self) -> bool:
        return self.unmatched == 0

    def record(self, report: CheckReport) -> None:
        report.record("precision bits", self.bits)
        report.record("max coefficient", self.max_coefficient)
        report.record("unmatched roots", self.unmatched)
        report.inform(
            "search complete",
            self.complete,
            witness=self.unmatched,
            detail=None if self.complete else f"no relation with coefficients up to {self.max_coefficient}",
        )


def search_automorphisms(field: NumberField, settings: Optional[AutomorphismSettings] = None) -> AutomorphismSearch:
    """
    Every algebra automorphism x -> z of E that the numeric search reaches, identity first.

    Roots of p are isolated numerically, each one is matched to power-basis coordinates by
    an integer relation and the candidate is kept only if p(z) = 0 holds exactly. Roots with
    no relation below max_coefficient are counted as unmatched, so a short list is only
    conclusive when the search is complete.

    Raises:
        InvalidPolynomial: p is reducible, so E is not a field
        PrecisionExhausted: relations kept failing exact verification up to the precision cap
    """
    settings = settings or AutomorphismSettings()
    if not field.is_field:
        raise InvalidPolynomial(f"{field.poly.as_expr()} is reducible; automorphisms need a field")
    n = field.degree
    coefficients = list(reversed(field.coefficients()))
    found: List[SparseVector] = []
    bits = settings.precision_bits
    while True:
        failing = 0
        unmatched = 0
        with workprec(bits):
            try:
                roots = polyroots(coefficients, maxsteps=200, extraprec=bits)
            except NoConvergence:
                roots = []
                failing = n
            if roots:
                alpha, real = _embedding(roots)
                for beta in roots:
                    if real and im(beta) != 0:
                        continue
                    status, z = _candidate(field, alpha, beta, real, settings)
                    if status == "failed":
                        failing += 1
                    elif status == "absent":
                        unmatched += 1
                    elif z is not None and z not in found:
                        found.append(z)
        logger.debug(f"Automorphism search at {bits} bits: {len(found)} verified, {failing} unresolved, {unmatched} unmatched")
        if not failing:
            break
        if bits * 2 > settings.max_precision_bits:
            raise PrecisionExhausted(
                f"{failing} roots of {field.poly.as_expr()} unresolved at {bits} bits", failing
            )
        bits *= 2

    maps = [substitution_map(field, z) for z in found]
    maps.sort(key=lambda f: (not f.matrix.is_identity(), str(f.matrix.to_strings())))
    if maps and rank(Matrix.from_sparse_columns([flatten_operator(f.matrix) for f in maps], n * n)) != len(maps):
        raise ConsistencyError(f"Automorphisms of {field.name} are linearly dependent")
    if unmatched:
        logger.warning(
            f"{unmatched} roots of {field.poly.as_expr()} have no relation with coefficients up to "
            f"{settings.max_coefficient}; the automorphism list may be short"
        )
    logger.info(f"{len(maps)} automorphisms of {field.name} (degree {n}) at {bits} bits")
    return AutomorphismSearch(maps, bits, settings.max_coefficient, unmatched)


def automorphisms(field: NumberField, settings: Optional[AutomorphismSettings] = None) -> List[AlgebraMap]:
    """The verified automorphisms alone; see search_automorphisms."""
    return search_automorphisms(field, settings).maps


def automorphism_operators(universal: WeakBialgebra, maps: Sequence[AlgebraMap]) -> List[Element]:
    """The automorphisms as elements of End(E)."""
    result = []
    for f in maps:
        coords = flatten_operator(f.matrix)
        result.append(universal.algebra.element([coords.get(k, ZERO) for k in range(universal.dim)]))
    return result


def is_galois(field: NumberField, maps: Sequence[AlgebraMap]) -> bool:
    return len(maps) == field.degree
