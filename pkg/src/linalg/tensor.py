"""
Tensor conventions.

The basis vector e_i (x) e_j of V (x) W has flat index i * dim(W) + j (first leg major).
The flip V (x) W -> W (x) V sends flat index i * n + j to j * m + i, where m = dim V and
n = dim W.
"""

from typing import Dict

from .matrix import Matrix
from .rational import ONE, Scalar
from .subspace import Subspace
from .vectors import SparseVector


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Matrix of a (x) b: kron(a, b) . (u (x) v) = (a . u) (x) (b . v)."""
    return a.kron(b)


def flip_matrix(m: int, n: int) -> Matrix:
    """The flip V (x) W -> W (x) V for dim V = m, dim W = n."""
    return Matrix(n * m, m * n, {j * m + i: {i * n + j: ONE} for i in range(m) for j in range(n)})


def flip_vector(vector: SparseVector, m: int, n: int) -> SparseVector:
    return {(flat % n) * m + flat // n: c for flat, c in vector.items()}


def reshape(vector: SparseVector, m: int, n: int) -> Matrix:
    """Read a vector of V (x) W as the m x n matrix whose rows are first-leg indices."""
    data: Dict[int, Dict[int, Scalar]] = {}
    for flat, c in vector.items():
        data.setdefault(flat // n, {})[flat % n] = c
    return Matrix(m, n, data)


def flatten(matrix: Matrix) -> SparseVector:
    return {i * matrix.cols + j: c for i, j, c in matrix.nonzero()}


def apply_legs(f: Matrix, g: Matrix, vector: SparseVector) -> SparseVector:
    """(f (x) g) applied to a vector of V (x) W without forming kron(f, g)."""
    return flatten(f @ reshape(vector, f.cols, g.cols) @ g.transpose())


def tensor_square_contains(subspace: Subspace, vector: SparseVector) -> bool:
    """Whether a vector of V (x) V lies in S (x) S, tested on row and column spaces."""
    n = subspace.ambient_dim
    matrix = reshape(vector, n, n)
    rows_ok = all(subspace.contains_sparse(dict(matrix.row_items(i))) for i in matrix.nonzero_rows())
    if not rows_ok:
        return False
    transposed = matrix.transpose()
    return all(subspace.contains_sparse(dict(transposed.row_items(j))) for j in transposed.nonzero_rows())
