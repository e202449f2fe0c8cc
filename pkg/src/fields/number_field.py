"""Separable extensions E = Q[x]/(p) and their trace forms."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from sympy import Poly

from ..algebra.constructors import X, as_polynomial, poly_quotient
from ..algebra.structure import FinDimAlgebra
from ..bialgebroid.separability import SeparabilityStructure, separability_from_functional
from ..errors import DegenerateFunctional, DegenerateTrace, InvalidPolynomial
from ..linalg.matrix import Matrix
from ..linalg.rational import ZERO, Scalar
from ..linalg.subspace import inverse
from ..linalg.vectors import SparseVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumberField:
    """E = Q[x]/(p) for a monic squarefree p with integer coefficients, power basis 1, x, ..."""

    poly: Poly
    algebra: FinDimAlgebra

    @property
    def degree(self) -> int:
        return self.algebra.dim

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def is_field(self) -> bool:
        return self.poly.is_irreducible

    def coefficients(self) -> List[int]:
        """Coefficients of p, low to high."""
        return [int(c) for c in reversed(self.poly.all_coeffs())]


def number_field(p) -> NumberField:
    """
    Raises:
        InvalidPolynomial: p is not monic with integer coefficients, or not squarefree
    """
    poly = as_polynomial(p)
    if poly.degree() < 1:
        raise InvalidPolynomial(f"{poly.as_expr()} has degree {poly.degree()}")
    if poly.gcd(poly.diff(X)).degree() > 0:
        raise InvalidPolynomial(f"{poly.as_expr()} is not squarefree, so Q[x]/(p) is not separable")
    field = NumberField(poly=poly, algebra=poly_quotient(poly))
    logger.debug(f"Number field {field.name} of degree {field.degree}")
    return field


@dataclass(frozen=True)
class TraceForm:
    """tau(z) = Tr(L_z), its Gram matrix on the power basis and the trace quasibasis (x_i, y_i)."""

    tau: Tuple[Scalar, ...]
    gram: Matrix
    gram_inverse: Matrix
    separability: SeparabilityStructure

    @property
    def pairs(self) -> Tuple[Tuple[SparseVector, SparseVector], ...]:
        return self.separability.pairs

    def apply(self, z: SparseVector) -> Scalar:
        return self.separability.functional(z)


def trace_form(field: NumberField) -> TraceForm:
    """
    Trace of the regular representation and its quasibasis y_i = sum_j (G^-1)_ij x^j.

    Raises:
        DegenerateTrace: the Gram matrix is singular
    """
    algebra = field.algebra
    n = algebra.dim
    tau = []
    for k in range(n):
        left = algebra.left_matrix({k: 1})
        tau.append(sum((left[i, i] for i in range(n)), ZERO))
    try:
        separability = separability_from_functional(algebra, tau)
    except DegenerateFunctional as exc:
        raise DegenerateTrace(f"Trace form of {field.name} is degenerate") from exc
    gram = Matrix(n, n, {i: {j: separability.functional(algebra.product(i, j)) for j in range(n)} for i in range(n)})
    logger.debug(f"Trace form of {field.name}: tau = {[str(t) for t in tau]}")
    return TraceForm(tau=tuple(separability.psi), gram=gram, gram_inverse=inverse(gram), separability=separability)
