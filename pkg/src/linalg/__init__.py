"""Exact rational linear algebra."""

from .matrix import Matrix
from .quotient import QuotientSpace
from .rational import ONE, ZERO, Scalar, format_rational, parse_rational, to_rational
from .subspace import Subspace, image, inverse, kernel, rank, rref, solve, solve_many, subspace_equal
from .tensor import apply_legs, flatten, flip_matrix, flip_vector, kron, reshape, tensor_square_contains
from .vectors import SparseVector, Vector, dense, sparse

__all__ = [
    "Matrix",
    "QuotientSpace",
    "Subspace",
    "ONE",
    "ZERO",
    "Scalar",
    "SparseVector",
    "Vector",
    "apply_legs",
    "dense",
    "flatten",
    "flip_matrix",
    "flip_vector",
    "format_rational",
    "image",
    "inverse",
    "kernel",
    "kron",
    "parse_rational",
    "rank",
    "reshape",
    "rref",
    "solve",
    "solve_many",
    "sparse",
    "subspace_equal",
    "tensor_square_contains",
    "to_rational",
]
