"""Finite-dimensional unital associative algebras given by structure constants."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import DimensionMismatch
from ..linalg.matrix import Matrix
from ..linalg.rational import ONE, ZERO, RationalLike, Scalar, to_rational
from ..linalg.vectors import SparseVector, Vector, accumulate, dense

logger = logging.getLogger(__name__)

ProductTable = Dict[Tuple[int, int], SparseVector]


class FinDimAlgebra:
    """
    Algebra with basis e_0, ..., e_{n-1}.

    ``table[(i, j)]`` is the sparse coefficient vector of e_i . e_j; missing pairs
    multiply to zero. Elements are coordinate vectors.
    """

    def __init__(
        self,
        dim: int,
        table: Mapping[Tuple[int, int], Mapping[int, RationalLike]],
        unit: Sequence[RationalLike],
        basis_names: Optional[Sequence[str]] = None,
        name: Optional[str] = None,
    ):
        if dim < 1:
            raise DimensionMismatch(f"Algebra dimension must be positive, got {dim}")
        if len(unit) != dim:
            raise DimensionMismatch(f"Unit of length {len(unit)} for dimension {dim}")
        if basis_names is not None and len(basis_names) != dim:
            raise DimensionMismatch(f"{len(basis_names)} basis names for dimension {dim}")
        clean: ProductTable = {}
        for (i, j), product in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"Product index ({i}, {j}) outside dimension {dim}")
            entries: SparseVector = {}
            for k, value in product.items():
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"Coefficient index {k} outside dimension {dim}")
                value = to_rational(value)
                if value != 0:
                    entries[k] = value
            if entries:
                clean[(i, j)] = entries
        self._dim = dim
        self._table = clean
        self._unit: Vector = tuple(to_rational(v) for v in unit)
        self.basis_names: Optional[List[str]] = list(basis_names) if basis_names is not None else None
        self.name = name or f"algebra(dim={dim})"
        self._mult_matrix: Optional[Matrix] = None
        self._row_products: Dict[int, Dict[int, SparseVector]] = {}
        for (i, j), product in clean.items():
            self._row_products.setdefault(i, {})[j] = product

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def table(self) -> ProductTable:
        return self._table

    @property
    def unit(self) -> Vector:
        return self._unit

    def unit_sparse(self) -> SparseVector:
        return {i: c for i, c in enumerate(self._unit) if c != 0}

    def product(self, i: int, j: int) -> SparseVector:
        return self._table.get((i, j), {})

    def label(self, i: int) -> str:
        return self.basis_names[i] if self.basis_names else f"e{i}"

    # -- elements -----------------------------------------------------------

    def element(self, coords: Sequence[RationalLike]) -> "Element":
        return Element(self, tuple(to_rational(c) for c in coords))

    def one(self) -> "Element":
        return Element(self, self._unit)

    def basis_element(self, i: int) -> "Element":
        coords = [ZERO] * self._dim
        coords[i] = ONE
        return Element(self, tuple(coords))

    def multiply_sparse(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> SparseVector:
        result: SparseVector = {}
        for i, a in u.items():
            row = self._row_products.get(i)
            if not row:
                continue
            for j, b in v.items():
                product = row.get(j)
                if product:
                    ab = a * b
                    for k, c in product.items():
                        accumulate(result, k, ab * c)
        return result

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        if len(u) != self._dim or len(v) != self._dim:
            raise DimensionMismatch(f"Operands of length {len(u)}, {len(v)} in dimension {self._dim}")
        su = {i: a for i, a in enumerate(u) if a != 0}
        sv = {i: a for i, a in enumerate(v) if a != 0}
        return dense(self.multiply_sparse(su, sv), self._dim)

    def multiply_tensors(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> SparseVector:
        """Legwise product in A (x) A of flat sparse tensors: (a (x) b)(c (x) d) = ac (x) bd."""
        n = self._dim
        result: SparseVector = {}
        for flat_u, a in u.items():
            i, k = divmod(flat_u, n)
            second_row = self._row_products.get(k)
            if not second_row:
                continue
            for j, first in self._row_products.get(i, {}).items():
                for l, second in second_row.items():
                    b = v.get(j * n + l)
                    if b is None:
                        continue
                    ab = a * b
                    for r, c in first.items():
                        abc = ab * c
                        for s, d in second.items():
                            accumulate(result, r * n + s, abc * d)
        return result

    # -- regular representation ---------------------------------------------

    def left_matrix(self, u: Mapping[int, Scalar]) -> Matrix:
        """Matrix of x -> u.x (column j = u . e_j)."""
        data: Dict[int, Dict[int, Scalar]] = {}
        for i, a in u.items():
            for j, product in self._row_products.get(i, {}).items():
                for k, c in product.items():
                    accumulate(data.setdefault(k, {}), j, a * c)
        return Matrix(self._dim, self._dim, data)

    def right_matrix(self, u: Mapping[int, Scalar]) -> Matrix:
        """Matrix of x -> x.u (column j = e_j . u)."""
        data: Dict[int, Dict[int, Scalar]] = {}
        for i, a in u.items():
            for j in range(self._dim):
                for k, c in self._table.get((j, i), {}).items():
                    accumulate(data.setdefault(k, {}), j, a * c)
        return Matrix(self._dim, self._dim, data)

    def mult_matrix(self) -> Matrix:
        """The multiplication m: A (x) A -> A as a dim x dim^2 matrix."""
        if self._mult_matrix is None:
            n = self._dim
            self._mult_matrix = Matrix.from_sparse_columns(
                [self.product(i, j) for i in range(n) for j in range(n)], n
            )
        return self._mult_matrix

    def mult_array(self) -> List[List[Vector]]:
        """Dense rank-3 table: mult[i][j] = coefficient vector of e_i . e_j."""
        n = self._dim
        return [[dense(self.product(i, j), n) for j in range(n)] for i in range(n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinDimAlgebra):
            return NotImplemented
        return self._dim == other._dim and self._unit == other._unit and self._table == other._table

    def __hash__(self) -> int:
        return hash((self._dim, self._unit, frozenset((k, frozenset(v.items())) for k, v in self._table.items())))

    def __repr__(self) -> str:
        return f"FinDimAlgebra({self.name})"


@dataclass(frozen=True)
class Element:
    """Coordinate vector of an algebra element."""

    algebra: FinDimAlgebra
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise DimensionMismatch(f"Element of length {len(self.coords)} in {self.algebra.name}")

    def sparse(self) -> SparseVector:
        return {i: c for i, c in enumerate(self.coords) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other: "Element") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise DimensionMismatch(f"Elements of {self.algebra.name} and {other.algebra.name}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, dense(self.algebra.multiply_sparse(self.sparse(), other.sparse()), self.algebra.dim))
        c = to_rational(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        c = to_rational(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __repr__(self) -> str:
        terms = [f"{c}*{self.algebra.label(i)}" for i, c in enumerate(self.coords) if c != 0]
        return " + ".join(terms) if terms else "0"
