"""Morphisms, blow-ups, module-algebra actions and the universal morphism."""

from .actions import ModuleAlgebraAction, check_module_algebra_action, invariants
from .blow_up import blow_up, diagonal_embedding
from .checkers import (
    KINDS,
    check_bialgebroid_map,
    check_morphism,
    check_strict_morphism,
    check_weak_left_morphism,
    check_weak_right_morphism,
    deformation_identities,
)
from .universal import action_map, natural_action, radon_nikodym, universal_morphism

__all__ = [
    "KINDS",
    "ModuleAlgebraAction",
    "action_map",
    "blow_up",
    "check_bialgebroid_map",
    "check_module_algebra_action",
    "check_morphism",
    "check_strict_morphism",
    "check_weak_left_morphism",
    "check_weak_right_morphism",
    "deformation_identities",
    "diagonal_embedding",
    "invariants",
    "natural_action",
    "radon_nikodym",
    "universal_morphism",
]
