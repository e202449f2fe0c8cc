"""Morphism verdicts, blow-ups, module-algebra actions and the universal morphism."""

import pytest

from src.algebra import AlgebraMap, compose_maps
from src.bialgebroid import beta_l
from src.errors import DimensionMismatch, FactorizationError
from src.linalg import Matrix, Subspace
from src.morphisms import (
    ModuleAlgebraAction,
    action_map,
    blow_up,
    check_bialgebroid_map,
    check_module_algebra_action,
    check_morphism,
    check_strict_morphism,
    check_weak_left_morphism,
    check_weak_right_morphism,
    deformation_identities,
    diagonal_embedding,
    invariants,
    natural_action,
    universal_morphism,
)
from src.morphisms.universal import _factorization_mismatches


@pytest.fixture(scope="module")
def diagonal(z2, blow_ups):
    return diagonal_embedding(z2, blow_ups[2], 2)


def test_blow_up_shape(z2, blow_ups):
    assert blow_ups[2].dim == 8
    assert blow_ups[3].dim == 18
    assert blow_ups[2].epsilon == (1,) * 8
    # S(g (x) e12) = g (x) e21
    assert blow_ups[2].antipode.sparse_column(4 + 1) == {4 + 2: 1}
    with pytest.raises(ValueError):
        blow_up(z2, 0)


def test_diagonal_embedding_is_weak_but_not_strict(diagonal, z2, blow_ups):
    target = blow_ups[2]
    assert check_weak_left_morphism(diagonal, z2, target).passed
    assert check_weak_right_morphism(diagonal, z2, target).passed
    strict = check_strict_morphism(diagonal, z2, target)
    assert not strict.passed
    assert strict.kind == "strict"
    assert not strict.clause("Delta' f = (f (x) f) Delta").passed
    assert not strict.clause("eps' f = eps").passed
    assert strict.clause("algebra map: multiplicative").passed


def test_diagonal_embedding_is_a_bialgebroid_map(diagonal, z2, blow_ups):
    report = check_bialgebroid_map(diagonal, beta_l(z2), beta_l(blow_ups[2]))
    assert report.passed, report.to_table()
    assert report.values["omega"] == [["1"], ["1"]]


def test_check_morphism_dispatch(diagonal, z2, blow_ups):
    assert check_morphism("weak-left", diagonal, z2, blow_ups[2]).kind == "weak-left"
    assert not check_morphism("strict", diagonal, z2, blow_ups[2]).passed
    with pytest.raises(ValueError):
        check_morphism("lax", diagonal, z2, blow_ups[2])
    with pytest.raises(DimensionMismatch):
        check_strict_morphism(diagonal, z2, blow_ups[3])


def test_weak_left_morphisms_compose(z2, blow_ups):
    inner = diagonal_embedding(z2, blow_ups[1], 1)
    outer_target = blow_up(blow_ups[1], 2)
    outer = diagonal_embedding(blow_ups[1], outer_target, 2)
    assert check_strict_morphism(inner, z2, blow_ups[1]).passed
    assert check_weak_left_morphism(outer, blow_ups[1], outer_target).passed
    assert check_weak_left_morphism(compose_maps(outer, inner), z2, outer_target).passed


def test_identity_is_strict(universal_e2):
    identity = AlgebraMap.identity(universal_e2.algebra)
    assert check_strict_morphism(identity, universal_e2, universal_e2).passed
    assert deformation_identities(identity, universal_e2, universal_e2).passed


def test_trig_embedding(trig):
    assert trig.report.passed, trig.report.to_table()
    assert trig.report.kind == "weak-left"
    assert trig.report.values["radon-nikodym u"] == ["4", "0", "0", "0"]
    assert trig.report.clause("eps_W(w) = eps_A(phi(u^-1 w))").passed
    assert trig.report.clause("alpha_A (phi (x) id) = alpha_W").passed
    assert not check_strict_morphism(trig.embedding, trig.hopf, trig.universal).passed


def test_trig_action_and_invariants(trig):
    assert check_module_algebra_action(trig.action).passed
    assert invariants(trig.action) == Subspace.span([trig.field.algebra.unit], 4)


def test_natural_action_factors_through_identity(e2, universal_e2):
    action = natural_action(universal_e2, e2.algebra)
    assert check_module_algebra_action(action).passed
    phi, report = universal_morphism(action, universal_e2)
    assert phi.matrix.is_identity()
    assert report.passed
    assert invariants(action) == Subspace.span([e2.algebra.unit], 2)


def test_factorization_is_checked_on_every_basis_pair(e2, universal_e2):
    action = natural_action(universal_e2, e2.algebra)
    phi, report = universal_morphism(action, universal_e2)
    clause = report.clause("alpha_A (phi (x) id) = alpha_W")
    assert clause.passed
    assert clause.violations == 0
    zero = AlgebraMap(universal_e2.algebra, universal_e2.algebra, Matrix.zeros(4, 4), name="zero")
    # each e_ab sends exactly one basis vector e_b somewhere
    assert _factorization_mismatches(action, zero, action) == [[0, 0], [1, 1], [2, 0], [3, 1]]
    assert _factorization_mismatches(action, phi, action) == []


def test_trivial_action_fixes_everything(e2, z2):
    action = ModuleAlgebraAction.from_operators(z2, e2.algebra, [Matrix.identity(2), Matrix.identity(2)])
    assert check_module_algebra_action(action).passed
    assert invariants(action) == Subspace.full(2)


def test_non_multiplicative_action_does_not_factor(e2, z2, universal_e2):
    action = ModuleAlgebraAction.from_operators(z2, e2.algebra, [Matrix.identity(2), Matrix.identity(2).scale(2)])
    report = check_module_algebra_action(action)
    assert not report.clause("(w w') > m = w > (w' > m)").passed
    with pytest.raises(FactorizationError):
        universal_morphism(action, universal_e2)


def test_action_map_needs_matching_dimensions(trig, universal_e2):
    with pytest.raises(FactorizationError):
        action_map(trig.action, universal_e2)
