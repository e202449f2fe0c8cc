"""Weak bialgebra and weak Hopf algebra axioms, canonical subalgebras, integrals, grouplikes, deformations."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from src.errors import NotGrouplike, NotInSubalgebra
from src.fields import multiplication_operator, multiplication_subspace
from src.linalg import Subspace, dense
from src.wba import (
    Coalgebra,
    WeakBialgebra,
    ad_grouplike,
    canonical_subalgebras,
    check_antipode,
    check_canonical_subalgebras,
    check_wba,
    deform,
    grouplike_group,
    haar_check,
    has_tracial_deformation,
    is_left_grouplike,
    is_ordinary_bialgebra,
    left_integrals,
    opposite_coopposite,
    right_integrals,
    tracial_deformation_element,
)

WHAS = ["universal:e2", "universal:gauss", "universal:e3", "universal:e4", "blowup:1", "blowup:2", "blowup:3", "z2"]


@pytest.fixture
def wha(request, universals, blow_ups, z2):
    kind, _, key = request.param.partition(":")
    if kind == "universal":
        return universals[key]
    if kind == "blowup":
        return blow_ups[int(key)]
    return z2


@pytest.mark.parametrize("wha", WHAS, indirect=True)
def test_axioms_hold(wha):
    report = check_wba(wha)
    assert report.passed, report.to_table()
    assert all(c.violations == 0 for c in report.clauses)
    antipode = check_antipode(wha)
    assert antipode.passed, antipode.to_table()


@pytest.mark.parametrize("wha", WHAS, indirect=True)
def test_canonical_subalgebras(wha):
    report = check_canonical_subalgebras(wha)
    assert report.passed, report.to_table()


@pytest.mark.parametrize("wha", ["universal:e2", "blowup:2"], indirect=True)
def test_opposite_coopposite_is_a_weak_bialgebra(wha):
    assert check_wba(opposite_coopposite(wha)).passed


def test_group_algebra_is_ordinary(z2, universal_e2, blow_ups):
    assert is_ordinary_bialgebra(z2)
    assert not is_ordinary_bialgebra(universal_e2)
    assert not is_ordinary_bialgebra(blow_ups[2])
    assert is_ordinary_bialgebra(blow_ups[1])


def test_universal_e2_counit_and_unit_legs(e2, universal_e2):
    assert universal_e2.epsilon == (2, 0, 0, 0)
    canonical = canonical_subalgebras(universal_e2)
    assert canonical.L == multiplication_subspace(e2)
    assert canonical.R == multiplication_subspace(e2)


def test_broken_counit_is_reported(z2):
    broken = WeakBialgebra(z2.algebra, Coalgebra(z2.delta, [1, 2]), name="broken")
    report = check_wba(broken)
    assert not report.passed
    assert not report.clause("left counit").passed
    assert report.clause("left counit").witness == 1


def test_integrals_of_z2(z2):
    line = Subspace.span([[1, 1]], 2)
    assert left_integrals(z2) == line
    assert right_integrals(z2) == line
    assert haar_check(z2, z2.algebra.element([QQ(1, 2), QQ(1, 2)])).passed
    assert not haar_check(z2, z2.algebra.element([1, 1])).passed


def test_grouplikes_of_z2(z2):
    candidates = [z2.algebra.one(), z2.algebra.basis_element(1), z2.algebra.element([1, 1]), z2.algebra.element([2, 0])]
    group = grouplike_group(z2, candidates)
    assert len(group) == 2
    assert group.report.passed, group.report.to_table()
    assert dict(group.excluded) == {2: "not invertible", 3: "Delta(g) != Delta(1)(g (x) g)"}


def test_left_grouplike_membership(z2, universal_e4):
    assert is_left_grouplike(z2, z2.algebra.basis_element(1))
    assert not is_left_grouplike(z2, z2.algebra.element([1, 1]))
    assert not is_left_grouplike(z2, z2.algebra.element([2, 0]))
    assert is_left_grouplike(universal_e4, universal_e4.algebra.one())
    zero = universal_e4.algebra.element([0] * 16)
    assert not is_left_grouplike(universal_e4, zero)


def test_ad_grouplike(z2):
    g = z2.algebra.basis_element(1)
    conjugation, report = ad_grouplike(z2, g)
    assert conjugation.matrix.is_identity()
    assert report.passed
    with pytest.raises(NotGrouplike):
        ad_grouplike(z2, z2.algebra.element([1, 1]))


def test_tracial_deformation_element(z2, universal_e2, blow_ups):
    assert tracial_deformation_element(universal_e2).coords == universal_e2.algebra.unit
    for hopf in (z2, universal_e2, blow_ups[2]):
        assert has_tracial_deformation(hopf)


def test_trivial_deformation_keeps_the_axioms(universal_e2):
    result = deform(universal_e2, universal_e2.algebra.one())
    assert result.report.passed
    assert result.wba.delta == universal_e2.delta


def test_non_scalar_deformation_breaks_multiplicativity(e2, universal_e2):
    u = universal_e2.algebra.element(dense(multiplication_operator(e2, {0: 1, 1: 1}), 4))
    result = deform(universal_e2, u)
    assert not result.report.passed
    assert not result.report.clause("comultiplication is multiplicative").passed


def test_deformation_requires_an_element_of_l(universal_e2):
    with pytest.raises(NotInSubalgebra):
        deform(universal_e2, universal_e2.algebra.basis_element(1))


nonzero_pairs = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@settings(max_examples=200, deadline=None)
@given(nonzero_pairs)
def test_deformation_round_trip_on_universal_e2(universal_e2, e2, pair):
    a, b = pair
    assume(a or b)
    u = universal_e2.algebra.element(dense(multiplication_operator(e2, {0: a, 1: b}), 4))
    there = deform(universal_e2, u, check=False)
    back = deform(there.wba, there.u_inverse, check=False)
    assert back.wba.delta == universal_e2.delta
    assert back.wba.epsilon == universal_e2.epsilon


@settings(max_examples=200, deadline=None)
@given(nonzero_pairs)
def test_deformation_round_trip_on_blow_up(blow_ups, pair):
    a, b = pair
    assume(a and b)
    wba = blow_ups[2]
    coords = [0] * wba.dim
    coords[0], coords[3] = a, b
    there = deform(wba, wba.algebra.element(coords), check=False)
    back = deform(there.wba, there.u_inverse, check=False)
    assert back.wba.delta == wba.delta
    assert back.wba.epsilon == wba.epsilon
