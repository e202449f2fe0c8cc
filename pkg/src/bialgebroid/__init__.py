"""Bialgebroids over finite-dimensional bases."""

from .bialgebroid import (
    LeftBialgebroid,
    RightBialgebroid,
    beta_l,
    beta_r,
    bialgebroids_equivalent,
    check_left_bialgebroid,
    deformation_preserves_bialgebroid,
)
from .galois import galois_bialgebroid
from .lift import check_lift, counit_separability, lift_to_wba, round_trip, sigma_matrix
from .separability import SeparabilityStructure, separability_from_functional
from .tensor_square import BaseTensorSquare

__all__ = [
    "BaseTensorSquare",
    "LeftBialgebroid",
    "RightBialgebroid",
    "SeparabilityStructure",
    "beta_l",
    "beta_r",
    "bialgebroids_equivalent",
    "check_left_bialgebroid",
    "check_lift",
    "counit_separability",
    "deformation_preserves_bialgebroid",
    "galois_bialgebroid",
    "lift_to_wba",
    "round_trip",
    "separability_from_functional",
    "sigma_matrix",
]
