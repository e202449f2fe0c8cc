"""Number fields, End(E), automorphisms, W-Galois actions and the Fix / Gal correspondence."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from src.algebra import algebra_closure
from src.errors import InvalidPolynomial, NotInSubalgebra
from src.fields import (
    AutomorphismSettings,
    automorphism_operators,
    automorphisms,
    check_galois_connection,
    fix,
    gal,
    is_galois,
    multiplication_form,
    multiplication_operator,
    number_field,
    presentation_relations,
    search_automorphisms,
    smash_product,
    sub_wha,
    sub_wha_closure,
    subfield,
    trace_form,
    trig_tables,
    verify_structural_properties,
    w_galois_check,
)
from src.linalg import Matrix, Subspace
from src.morphisms import ModuleAlgebraAction, natural_action
from src.report import CheckReport
from src.wba import cyclic_group_hopf

AUTOMORPHISM_COUNTS = {"e2": 2, "gauss": 2, "e3": 1, "e4": 2}


def test_trace_form_of_e2(e2):
    form = trace_form(e2)
    assert form.tau == (2, 0)
    assert form.gram == Matrix.from_rows([[2, 0], [0, 4]])
    assert form.apply({0: 1, 1: 5}) == 2


@pytest.mark.parametrize("text", ["x^2", "x^2 - 2*x + 1", "x^3 - x^2"])
def test_number_field_rejects_repeated_roots(text):
    with pytest.raises(InvalidPolynomial):
        number_field(text)


def test_reducible_polynomial_has_no_automorphism_search():
    split = number_field("x^2 - 1")
    assert not split.is_field
    with pytest.raises(InvalidPolynomial):
        automorphisms(split)


# -- End(E) --------------------------------------------------------------------------


def test_coproduct_of_the_unit_on_e2(e2, universal_e2):
    assert multiplication_form(e2, universal_e2.delta_one()) == {(0, 0): QQ(1, 2), (1, 1): QQ(1, 4)}


def test_coproducts_on_e4(e4, universal_e4):
    assert multiplication_form(e4, universal_e4.delta_one()) == {
        (0, 0): QQ(1, 4),
        (1, 3): QQ(1, 8),
        (2, 2): QQ(1, 8),
        (3, 1): QQ(1, 8),
    }
    x = multiplication_operator(e4, {1: 1})
    assert multiplication_form(e4, universal_e4.comultiply(x)) == {
        (1, 0): QQ(1, 4),
        (0, 1): QQ(1, 4),
        (3, 2): QQ(1, 8),
        (2, 3): QQ(1, 8),
    }


def test_multiplication_form_outside_lambda(e2):
    # e11 (x) e12
    assert multiplication_form(e2, {1: 1}) is None


@pytest.mark.parametrize("name", ["e2", "gauss", "e3", "e4"])
def test_structural_properties(name, fields, universals):
    report = verify_structural_properties(fields[name], universals[name])
    assert report.passed, report.to_table()
    assert report.values["grouplike count"] == AUTOMORPHISM_COUNTS[name]
    assert report.values["dim left integrals"] == fields[name].degree


@pytest.mark.parametrize("name", ["e2", "gauss", "e3", "e4"])
def test_automorphism_counts(name, fields):
    maps = automorphisms(fields[name])
    assert len(maps) == AUTOMORPHISM_COUNTS[name]
    assert maps[0].matrix.is_identity()
    assert is_galois(fields[name], maps) == (name in ("e2", "gauss"))


def test_conjugation_of_e2(e2):
    identity, conjugation = automorphisms(e2)
    assert conjugation.matrix == Matrix.from_rows([[1, 0], [0, -1]])


def test_short_coefficient_cap_leaves_the_search_incomplete():
    golden = number_field("x^2 - 3*x + 1")
    # x -> 3 - x needs a relation with coefficient 3
    capped = search_automorphisms(golden, AutomorphismSettings(max_coefficient=2))
    assert len(capped.maps) == 1
    assert capped.unmatched == 1
    assert not capped.complete
    report = CheckReport(subject="capped")
    capped.record(report)
    assert report.values["unmatched roots"] == 1
    assert report.values["max coefficient"] == 2
    assert report.values["precision bits"] == 256
    assert not report.clause("search complete").passed
    assert report.passed

    full = search_automorphisms(golden)
    assert full.complete
    assert len(full.maps) == 2
    assert is_galois(golden, full.maps)


def test_precision_below_double_is_refused():
    with pytest.raises(ValueError):
        AutomorphismSettings(precision_bits=32)


# -- the trigonometric Hopf algebra --------------------------------------------------


def test_trig_tables_and_relations(trig):
    tables = trig_tables(trig)
    assert tables.passed, tables.to_table()
    assert tables.values["eps(c)"] == "4"
    assert not tables.clause("f strict").passed
    assert presentation_relations(trig).passed


def test_trig_action_is_galois(trig):
    report = w_galois_check(trig.field, trig.action, trig.universal)
    assert report.passed, report.to_table()
    assert report.values["rank"] == 16
    assert report.values["dim E (x)_L W"] == 16


def test_universal_action_is_galois(e2, universal_e2):
    report = w_galois_check(e2, natural_action(universal_e2, e2.algebra), universal_e2)
    assert report.passed, report.to_table()


def test_trivial_action_is_not_galois(e2):
    z2 = cyclic_group_hopf(2)
    action = ModuleAlgebraAction.from_operators(z2, e2.algebra, [Matrix.identity(2), Matrix.identity(2)])
    report = w_galois_check(e2, action)
    assert not report.clause("canonical map bijective").passed
    smash = smash_product(action)
    assert smash.quotient.dim == 4
    assert not smash.bijective


# -- Fix and Gal ----------------------------------------------------------------------


@pytest.fixture(scope="module")
def gal_cache(e4, universal_e4):
    cache = {}

    def lookup(space):
        if space not in cache:
            cache[space] = gal(subfield(e4, space), universal_e4)
        return cache[space]

    return lookup


def test_gal_dimensions(e4_subfields, gal_cache):
    assert [gal_cache(space).dim for space in e4_subfields.values()] == [16, 8, 4]
    for space in e4_subfields.values():
        assert fix(gal_cache(space)).subspace == space


def test_galois_connection_on_e4(e4, universal_e4, e4_subfields, gal_cache):
    subfields = [subfield(e4, space) for space in e4_subfields.values()]
    subwhas = [gal_cache(space) for space in e4_subfields.values()]
    report = check_galois_connection(universal_e4, subfields, subwhas)
    assert report.passed, report.to_table()
    assert report.values["dim Gal(F)"] == [16, 8, 4]
    assert report.values["dim Fix(W)"] == [1, 2, 4]


def test_automorphisms_generate_gal_of_the_fixed_field(e4, universal_e4, e4_subfields, gal_cache):
    operators = automorphism_operators(universal_e4, automorphisms(e4))
    group = Subspace.span([g.coords for g in operators], 16)
    with pytest.raises(NotInSubalgebra):
        sub_wha(e4, universal_e4, group)
    closure = sub_wha_closure(e4, universal_e4, group)
    assert closure.subspace == gal_cache(e4_subfields["Q(sqrt2)"]).subspace
    assert fix(closure).subspace == e4_subfields["Q(sqrt2)"]


def test_subfield_rejects_non_subalgebras(e4):
    with pytest.raises(NotInSubalgebra):
        subfield(e4, Subspace.span([[0, 1, 0, 0]], 4))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_fix_of_gal_is_closed(e4, e4_subfields, gal_cache, z):
    assume(any(z[1:]))
    generated = algebra_closure(e4.algebra, Subspace.span([z], 4))
    assert generated in e4_subfields.values()
    W = gal_cache(generated)
    assert fix(W).subspace == generated
    for space in e4_subfields.values():
        assert (W.subspace <= gal_cache(space).subspace) == (space <= generated)
