"""Weak bialgebras and weak Hopf algebras."""

from .antipode import check_antipode
from .coalgebra import Coalgebra, check_coalgebra
from .deformation import Deformation, deform, has_tracial_deformation, tracial_deformation_element
from .grouplikes import GrouplikeGroup, ad_grouplike, grouplike_group, is_left_grouplike, twist_element
from .hopf import cyclic_group_hopf
from .integrals import haar_check, left_integrals, right_integrals
from .weak_bialgebra import (
    CanonicalSubalgebras,
    WeakBialgebra,
    WeakHopfAlgebra,
    canonical_subalgebras,
    check_canonical_subalgebras,
    check_wba,
    is_ordinary_bialgebra,
    left_leg_span,
    opposite_coopposite,
    right_leg_span,
)

__all__ = [
    "CanonicalSubalgebras",
    "Coalgebra",
    "Deformation",
    "GrouplikeGroup",
    "WeakBialgebra",
    "WeakHopfAlgebra",
    "ad_grouplike",
    "canonical_subalgebras",
    "check_antipode",
    "check_canonical_subalgebras",
    "check_coalgebra",
    "check_wba",
    "cyclic_group_hopf",
    "deform",
    "grouplike_group",
    "haar_check",
    "has_tracial_deformation",
    "is_left_grouplike",
    "is_ordinary_bialgebra",
    "left_integrals",
    "left_leg_span",
    "opposite_coopposite",
    "right_integrals",
    "right_leg_span",
    "tracial_deformation_element",
    "twist_element",
]
