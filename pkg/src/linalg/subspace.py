"""Subspaces in canonical reduced-row-echelon form, kernels, images and solving."""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, NotInvertible
from .matrix import Matrix
from .rational import ONE, ZERO, Scalar
from .vectors import SparseVector, Vector

logger = logging.getLogger(__name__)


def rref(matrix: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form with the zero rows dropped.

    Returns:
        (reduced matrix with one row per pivot, pivot columns)
    """
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        return Matrix.zeros(0, matrix.cols), ()
    reduced, pivots = matrix.to_domain_matrix().rref()
    pivots = tuple(int(p) for p in pivots)
    return Matrix.from_domain_matrix(reduced).select_rows(range(len(pivots))), pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


class Subspace:
    """
    Subspace of Q^n held by its canonical basis.

    The basis rows are the nonzero rows of the reduced row echelon form, so two
    subspaces are equal exactly when their bases are equal.
    """

    __slots__ = ("_ambient_dim", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: Tuple[int, ...]):
        self._ambient_dim = ambient_dim
        self._basis = basis
        self._pivots = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], ambient_dim: int) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"Vector of length {len(v)} in ambient dimension {ambient_dim}")
        return cls.row_space(Matrix.from_rows(rows, cols=ambient_dim))

    @classmethod
    def span_sparse(cls, vectors: Iterable[SparseVector], ambient_dim: int) -> "Subspace":
        rows = {i: dict(v) for i, v in enumerate(vectors) if v}
        return cls.row_space(Matrix(len(rows), ambient_dim, dict(enumerate(rows.values()))))

    @classmethod
    def row_space(cls, matrix: Matrix) -> "Subspace":
        basis, pivots = rref(matrix)
        return cls(matrix.cols, basis, pivots)

    @classmethod
    def column_space(cls, matrix: Matrix) -> "Subspace":
        return cls.row_space(matrix.transpose())

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def basis(self) -> Matrix:
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    def vectors(self) -> List[Vector]:
        return [self._basis.row(k) for k in range(self.dim)]

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns (ambient_dim x dim), i.e. the inclusion map."""
        return self._basis.transpose()

    def _require_vector(self, vector: Sequence[Scalar]) -> None:
        if len(vector) != self._ambient_dim:
            raise DimensionMismatch(f"Vector of length {len(vector)} in ambient dimension {self._ambient_dim}")

    def reduce_sparse(self, vector: SparseVector) -> SparseVector:
        """Remainder of vector after eliminating every pivot coordinate."""
        remainder = dict(vector)
        for k, pivot in enumerate(self._pivots):
            c = remainder.get(pivot)
            if c is None:
                continue
            for j, value in self._basis.row_items(k):
                total = remainder.get(j, ZERO) - c * value
                if total == 0:
                    remainder.pop(j, None)
                else:
                    remainder[j] = total
        return remainder

    def contains(self, vector: Sequence[Scalar]) -> bool:
        self._require_vector(vector)
        return not self.reduce_sparse({i: v for i, v in enumerate(vector) if v != 0})

    def contains_sparse(self, vector: SparseVector) -> bool:
        return not self.reduce_sparse(vector)

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        """Coefficients of vector in the canonical basis; raises if outside the subspace."""
        if not self.contains(vector):
            raise ValueError("Vector does not lie in the subspace")
        return tuple(vector[p] for p in self._pivots)

    def coordinates_sparse(self, vector: SparseVector) -> Vector:
        if not self.contains_sparse(vector):
            raise ValueError("Vector does not lie in the subspace")
        return tuple(vector.get(p, ZERO) for p in self._pivots)

    def coordinate_matrix(self) -> Matrix:
        """Left inverse of basis_matrix: reads canonical coordinates off the pivots."""
        return Matrix(self.dim, self._ambient_dim, {k: {p: 1} for k, p in enumerate(self._pivots)})

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains_sparse(dict(self._basis.row_items(k))) for k in range(self.dim))

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.row_space(Matrix.vstack(self._basis, other._basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [B1; -B2]^T."""
        _check_ambient(self, other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self._ambient_dim)
        stacked = Matrix.hstack(self.basis_matrix(), -other.basis_matrix())
        solutions = kernel(stacked)
        combos = solutions.basis.select_columns(range(self.dim))
        return Subspace.row_space(combos @ self._basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self._ambient_dim})"


def _check_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionMismatch(f"Ambient dimensions {s1.ambient_dim} and {s2.ambient_dim} differ")


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    _check_ambient(s1, s2)
    return s1 == s2


def kernel(matrix: Matrix) -> Subspace:
    """Solution space of matrix . v = 0 in canonical form."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [j for j in range(matrix.cols) if j not in pivot_set]
    vectors: List[SparseVector] = []
    for f in free:
        v: SparseVector = {f: ONE}
        for k, p in enumerate(pivots):
            value = reduced[k, f]
            if value != 0:
                v[p] = -value
        vectors.append(v)
    logger.debug(f"Kernel of {matrix.rows}x{matrix.cols} matrix: rank {len(pivots)}, nullity {len(free)}")
    return Subspace.span_sparse(vectors, matrix.cols)


def image(matrix: Matrix) -> Subspace:
    return Subspace.column_space(matrix)


def solve(matrix: Matrix, rhs: Sequence[Scalar]) -> Optional[Vector]:
    """One solution of matrix . x = rhs (free variables set to zero), or None."""
    if len(rhs) != matrix.rows:
        raise DimensionMismatch(f"Right-hand side of length {len(rhs)} for {matrix.shape} matrix")
    augmented = Matrix.hstack(matrix, Matrix.column_vector(list(rhs)))
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == matrix.cols:
        return None
    solution = [ZERO] * matrix.cols
    for k, p in enumerate(pivots):
        solution[p] = reduced[k, matrix.cols]
    return tuple(solution)


def solve_many(matrix: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """Solve matrix . X = rhs column by column with one elimination; None if inconsistent."""
    if rhs.rows != matrix.rows:
        raise DimensionMismatch(f"Right-hand side {rhs.shape} for {matrix.shape} matrix")
    augmented = Matrix.hstack(matrix, rhs)
    reduced, pivots = rref(augmented)
    if any(p >= matrix.cols for p in pivots):
        return None
    data = {}
    for k, p in enumerate(pivots):
        row = {j - matrix.cols: v for j, v in reduced.row_items(k) if j >= matrix.cols}
        if row:
            data[p] = row
    return Matrix(matrix.cols, rhs.cols, data)


def inverse(matrix: Matrix) -> Matrix:
    if not matrix.is_square():
        raise NotInvertible(f"Matrix of shape {matrix.shape} is not square")
    result = solve_many(matrix, Matrix.identity(matrix.rows))
    if result is None:
        raise NotInvertible("Matrix is singular")
    return result
