"""Separable field extensions of Q and their universal weak Hopf algebras."""

from .automorphisms import (
    AutomorphismSearch,
    AutomorphismSettings,
    automorphism_operators,
    automorphisms,
    is_galois,
    search_automorphisms,
    substitution_map,
)
from .galois_connection import (
    SubfieldDatum,
    SubWHADatum,
    check_galois_connection,
    fix,
    gal,
    is_delta_closed,
    sub_wha,
    sub_wha_closure,
    subfield,
)
from .number_field import NumberField, TraceForm, number_field, trace_form
from .properties import verify_structural_properties
from .trig import TrigBundle, presentation_relations, trig_example, trig_hopf_algebra, trig_tables
from .universal import (
    flatten_operator,
    multiplication_form,
    multiplication_operator,
    multiplication_subspace,
    operator_element,
    unflatten_operator,
    universal_wha,
)
from .w_galois import SmashProduct, balanced_relations, canonical_map_matrix, smash_product, w_galois_check

__all__ = [
    "AutomorphismSearch",
    "AutomorphismSettings",
    "NumberField",
    "SmashProduct",
    "SubWHADatum",
    "SubfieldDatum",
    "TraceForm",
    "TrigBundle",
    "automorphism_operators",
    "automorphisms",
    "balanced_relations",
    "canonical_map_matrix",
    "check_galois_connection",
    "fix",
    "flatten_operator",
    "gal",
    "is_delta_closed",
    "is_galois",
    "multiplication_form",
    "multiplication_operator",
    "multiplication_subspace",
    "number_field",
    "operator_element",
    "presentation_relations",
    "search_automorphisms",
    "smash_product",
    "sub_wha",
    "sub_wha_closure",
    "subfield",
    "substitution_map",
    "trace_form",
    "trig_example",
    "trig_hopf_algebra",
    "trig_tables",
    "unflatten_operator",
    "universal_wha",
    "verify_structural_properties",
    "w_galois_check",
]
