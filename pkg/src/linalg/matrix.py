"""Immutable exact rational matrices."""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import DimensionMismatch
from .rational import ZERO, RationalLike, Scalar, format_rational, to_rational
from .vectors import SparseVector, Vector

logger = logging.getLogger(__name__)

Rows = Tuple[Vector, ...]


def _nonzero(row: Vector) -> Iterator[Tuple[int, Scalar]]:
    return ((j, v) for j, v in enumerate(row) if v)


class Matrix:
    """
    Dense rational matrix with value semantics, stored row-major as tuples of QQ.

    The constructor also accepts entries keyed by position (row -> column -> value);
    unlisted entries are zero.
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, data: Optional[Mapping[int, Mapping[int, RationalLike]]] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Invalid shape {rows}x{cols}")
        entries = [[ZERO] * cols for _ in range(rows)]
        for i, row in (data or {}).items():
            if not 0 <= i < rows:
                raise IndexError(f"Row {i} outside {rows}x{cols}")
            for j, value in row.items():
                if not 0 <= j < cols:
                    raise IndexError(f"Column {j} outside {rows}x{cols}")
                entries[i][j] = to_rational(value)
        self._rows = rows
        self._cols = cols
        self._entries: Rows = tuple(tuple(row) for row in entries)

    # -- constructors -------------------------------------------------------

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: Iterable[Iterable[Scalar]]) -> "Matrix":
        """Wrap rows that already hold QQ values of the right length."""
        matrix = cls.__new__(cls)
        matrix._rows = rows
        matrix._cols = cols
        matrix._entries = tuple(tuple(row) for row in entries)
        return matrix

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {i: {i: QQ.one} for i in range(n)})

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "Matrix":
        return cls(len(values), len(values), {i: {i: v} for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f"Row {i} has {len(row)} entries, expected {cols}")
        return cls._trusted(len(rows), cols, ([to_rational(v) for v in row] for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: Optional[int] = None) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatch(f"Column {j} has {len(column)} entries, expected {rows}")
        return cls.from_rows([[column[i] for column in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def from_sparse_columns(cls, columns: Sequence[Mapping[int, Scalar]], rows: int) -> "Matrix":
        """Columns given by their nonzero coordinates."""
        data: Dict[int, Dict[int, Scalar]] = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                data.setdefault(i, {})[j] = value
        return cls(rows, len(columns), data)

    @classmethod
    def row_vector(cls, values: Sequence[RationalLike]) -> "Matrix":
        return cls.from_rows([list(values)], cols=len(values))

    @classmethod
    def column_vector(cls, values: Sequence[RationalLike]) -> "Matrix":
        return cls.from_columns([list(values)], rows=len(values))

    @classmethod
    def from_domain_matrix(cls, matrix: DomainMatrix) -> "Matrix":
        rows, cols = matrix.shape
        if matrix.domain != QQ:
            matrix = matrix.convert_to(QQ)
        return cls._trusted(rows, cols, matrix.to_dense().to_list())

    # -- shape and access ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def nnz(self) -> int:
        return sum(1 for row in self._entries for v in row if v)

    def __getitem__(self, position: Tuple[int, int]) -> Scalar:
        i, j = position
        return self._entries[i][j]

    def row(self, i: int) -> Vector:
        return self._entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._entries)

    def row_items(self, i: int) -> Iterator[Tuple[int, Scalar]]:
        """Nonzero (column, value) pairs of row i."""
        return _nonzero(self._entries[i])

    def sparse_column(self, j: int) -> SparseVector:
        return {i: row[j] for i, row in enumerate(self._entries) if row[j]}

    def sparse_columns(self) -> List[SparseVector]:
        columns: List[SparseVector] = [{} for _ in range(self._cols)]
        for i, row in enumerate(self._entries):
            for j, value in _nonzero(row):
                columns[j][i] = value
        return columns

    def columns(self) -> List[Vector]:
        return [tuple(column) for column in zip(*self._entries)] if self._rows else [()] * self._cols

    def nonzero(self) -> Iterator[Tuple[int, int, Scalar]]:
        """Nonzero entries as (row, column, value), row-major."""
        for i, row in enumerate(self._entries):
            for j, value in _nonzero(row):
                yield i, j, value

    def nonzero_rows(self) -> List[int]:
        return [i for i, row in enumerate(self._entries) if any(row)]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(v) for v in row] for row in self._entries]

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self._entries], self.shape, QQ)

    # -- algebra ------------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix._trusted(self._cols, self._rows, self.columns())

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"Shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._trusted(
            self._rows, self._cols, ([a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries))
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._trusted(
            self._rows, self._cols, ([a - b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries))
        )

    def scale(self, c: RationalLike) -> "Matrix":
        c = to_rational(c)
        return Matrix._trusted(self._rows, self._cols, ([c * v for v in row] for row in self._entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._cols != other._rows:
            raise DimensionMismatch(f"Cannot compose {self.shape} with {other.shape}")
        # rows of other restricted to their nonzeros, so zero blocks cost nothing
        other_rows = [list(_nonzero(row)) for row in other._entries]
        result = []
        for row in self._entries:
            acc = [ZERO] * other._cols
            for k, a in _nonzero(row):
                for j, b in other_rows[k]:
                    acc[j] += a * b
            result.append(acc)
        return Matrix._trusted(self._rows, other._cols, result)

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self._cols:
            raise DimensionMismatch(f"Vector of length {len(vector)} for {self.shape} matrix")
        support = [(j, x) for j, x in enumerate(vector) if x]
        return tuple(sum((row[j] * x for j, x in support), ZERO) for row in self._entries)

    def apply_sparse(self, vector: Mapping[int, Scalar]) -> SparseVector:
        """Same as apply, for sparse input and output."""
        result: SparseVector = {}
        for i, row in enumerate(self._entries):
            total = sum((row[j] * x for j, x in vector.items()), ZERO)
            if total:
                result[i] = total
        return result

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, first factor major."""
        result = []
        for row in self._entries:
            for orow in other._entries:
                result.append([a * b for a in row for b in orow])
        return Matrix._trusted(self._rows * other._rows, self._cols * other._cols, result)

    def select_rows(self, indices: Iterable[int]) -> "Matrix":
        chosen = [self._entries[i] for i in indices]
        return Matrix._trusted(len(chosen), self._cols, chosen)

    def select_columns(self, indices: Iterable[int]) -> "Matrix":
        indices = list(indices)
        return Matrix._trusted(self._rows, len(indices), ([row[j] for j in indices] for row in self._entries))

    @staticmethod
    def vstack(*blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ValueError("Nothing to stack")
        cols = blocks[0].cols
        stacked: List[Vector] = []
        for block in blocks:
            if block.cols != cols:
                raise DimensionMismatch(f"Cannot stack {block.shape} under width {cols}")
            stacked.extend(block._entries)
        return Matrix._trusted(len(stacked), cols, stacked)

    @staticmethod
    def hstack(*blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise ValueError("Nothing to stack")
        rows = blocks[0].rows
        for block in blocks:
            if block.rows != rows:
                raise DimensionMismatch(f"Cannot place {block.shape} beside height {rows}")
        width = sum(block.cols for block in blocks)
        return Matrix._trusted(rows, width, (sum((block._entries[i] for block in blocks), ()) for i in range(rows)))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._entries)

    def is_square(self) -> bool:
        return self._rows == self._cols

    def is_identity(self) -> bool:
        return self.is_square() and all(
            v == (1 if i == j else 0) for i, row in enumerate(self._entries) for j, v in enumerate(row)
        )

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, self._entries))

    def __repr__(self) -> str:
        if self._rows * self._cols <= 64:
            return f"Matrix({self.to_strings()})"
        return f"Matrix({self._rows}x{self._cols}, nnz={self.nnz})"
