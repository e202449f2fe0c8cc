"""Finite-dimensional algebras by structure constants."""

from .constructors import (
    algebra_from_array,
    as_polynomial,
    diagonal_algebra,
    group_algebra_cyclic,
    matrix_algebra,
    opposite,
    poly_quotient,
    tensor_algebra,
)
from .maps import AlgebraMap, check_algebra_map, compose_maps
from .operations import algebra_closure, center, check_algebra, commutant, invert, is_invertible, is_subalgebra, subalgebra
from .structure import Element, FinDimAlgebra

__all__ = [
    "AlgebraMap",
    "Element",
    "FinDimAlgebra",
    "algebra_closure",
    "algebra_from_array",
    "as_polynomial",
    "center",
    "check_algebra",
    "check_algebra_map",
    "commutant",
    "compose_maps",
    "diagonal_algebra",
    "group_algebra_cyclic",
    "invert",
    "is_invertible",
    "is_subalgebra",
    "matrix_algebra",
    "opposite",
    "poly_quotient",
    "subalgebra",
    "tensor_algebra",
]
