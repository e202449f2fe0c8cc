"""Linear maps between algebras and their multiplicativity checks."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import DimensionMismatch
from ..linalg.matrix import Matrix
from ..linalg.rational import Scalar
from ..linalg.vectors import SparseVector, Vector
from ..report import CheckReport
from .structure import Element, FinDimAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraMap:
    """Linear map between algebras given by a (codomain.dim x domain.dim) matrix."""

    domain: FinDimAlgebra
    codomain: FinDimAlgebra
    matrix: Matrix
    unital: bool = True
    name: Optional[str] = None

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatch(
                f"Map matrix {self.matrix.shape} does not fit {self.domain.name} -> {self.codomain.name}"
            )

    def apply(self, coords: Sequence[Scalar]) -> Vector:
        return self.matrix.apply(coords)

    def apply_sparse(self, coords: SparseVector) -> SparseVector:
        return self.matrix.apply_sparse(coords)

    def __call__(self, element: Element) -> Element:
        return Element(self.codomain, self.matrix.apply(element.coords))

    def compose(self, inner: "AlgebraMap") -> "AlgebraMap":
        """self . inner"""
        if inner.codomain.dim != self.domain.dim:
            raise DimensionMismatch(f"Cannot compose {self.label} after {inner.label}")
        return AlgebraMap(inner.domain, self.codomain, self.matrix @ inner.matrix, self.unital and inner.unital)

    @property
    def label(self) -> str:
        return self.name or f"{self.domain.name} -> {self.codomain.name}"

    @classmethod
    def identity(cls, algebra: FinDimAlgebra) -> "AlgebraMap":
        return cls(algebra, algebra, Matrix.identity(algebra.dim), name=f"id_{algebra.name}")


def compose_maps(*maps: AlgebraMap) -> AlgebraMap:
    """Compose a chain, rightmost applied first."""
    if not maps:
        raise ValueError("Nothing to compose")
    result = maps[-1]
    for outer in reversed(maps[:-1]):
        result = outer.compose(result)
    return result


def check_algebra_map(f: AlgebraMap, anti: bool = False) -> CheckReport:
    """
    Verify f(e_i e_j) = f(e_i) f(e_j) on basis pairs (or f(e_j) f(e_i) when anti).

    The unit clause is checked when the map is flagged unital.
    """
    report = CheckReport(subject=f"{'anti-' if anti else ''}algebra map {f.label}")
    images = [f.matrix.sparse_column(i) for i in range(f.domain.dim)]
    witness = None
    violations = 0
    for i in range(f.domain.dim):
        for j in range(f.domain.dim):
            lhs = f.matrix.apply_sparse(f.domain.product(i, j))
            if anti:
                rhs = f.codomain.multiply_sparse(images[j], images[i])
            else:
                rhs = f.codomain.multiply_sparse(images[i], images[j])
            if lhs != rhs:
                violations += 1
                if witness is None:
                    witness = [i, j]
    report.expect("anti-multiplicative" if anti else "multiplicative", violations == 0, witness, violations=violations)
    if f.unital:
        report.expect("unital", f.matrix.apply(f.domain.unit) == f.codomain.unit)
    return report
