"""Left bialgebroids of weak bialgebras, lifting back through the counit, and the Galois bialgebroid."""

import pytest
from sympy.polys.domains import QQ

from src.algebra import diagonal_algebra, matrix_algebra, poly_quotient
from src.bialgebroid import (
    LeftBialgebroid,
    beta_l,
    beta_r,
    bialgebroids_equivalent,
    check_left_bialgebroid,
    check_lift,
    counit_separability,
    deformation_preserves_bialgebroid,
    galois_bialgebroid,
    lift_to_wba,
    round_trip,
    separability_from_functional,
)
from src.errors import DegenerateFunctional, IndexNotOne, NotInSubalgebra
from src.linalg import Subspace
from src.wba import deform

FIXTURES = ["universal:e2", "universal:gauss", "universal:e3", "universal:e4", "blowup:1", "blowup:2", "blowup:3", "z2"]


@pytest.fixture
def wba(request, universals, blow_ups, z2):
    kind, _, key = request.param.partition(":")
    if kind == "universal":
        return universals[key]
    if kind == "blowup":
        return blow_ups[int(key)]
    return z2


@pytest.mark.parametrize("wba", FIXTURES, indirect=True)
def test_round_trip_is_exact(wba):
    lifted, report = round_trip(wba)
    assert report.passed, report.to_table()
    assert lifted.delta == wba.delta
    assert lifted.epsilon == wba.epsilon


@pytest.mark.parametrize("wba", ["universal:e2", "universal:e3", "blowup:2", "z2"], indirect=True)
def test_left_bialgebroid_axioms(wba):
    report = check_left_bialgebroid(beta_l(wba))
    assert report.passed, report.to_table()


@pytest.mark.parametrize("wba", ["universal:e2", "blowup:2"], indirect=True)
def test_right_bialgebroid_axioms(wba):
    report = check_left_bialgebroid(beta_r(wba))
    assert report.passed, report.to_table()


@pytest.mark.parametrize("wba", ["universal:e2", "blowup:2"], indirect=True)
def test_lift_identities(wba):
    bialgebroid = beta_l(wba)
    report = check_lift(bialgebroid, counit_separability(wba, bialgebroid))
    assert report.passed, report.to_table()


def test_base_dimensions(universal_e2, blow_ups, z2):
    assert beta_l(universal_e2).base.dim == 2
    assert beta_l(blow_ups[3]).base.dim == 3
    assert beta_l(z2).base.dim == 1


def test_scaled_coproduct_fails_the_counit_law(universal_e2):
    b = beta_l(universal_e2)
    scaled = LeftBialgebroid(b.source, b.target, b.gamma_representative.scale(2), b.counit, name="scaled")
    report = check_left_bialgebroid(scaled)
    assert not report.passed
    assert not report.clause("left counit").passed


def test_galois_bialgebroid_matches_the_universal_one(e2, universal_e2):
    galois = galois_bialgebroid(e2.algebra, Subspace.span([e2.algebra.unit], 2))
    assert check_left_bialgebroid(galois).passed
    report = bialgebroids_equivalent(galois, beta_l(universal_e2))
    assert report.passed, report.to_table()


def test_galois_bialgebroid_rejects_non_subalgebras(e2):
    with pytest.raises(NotInSubalgebra):
        galois_bialgebroid(e2.algebra, Subspace.span([[0, 1]], 2))


EXTENSIONS = {
    "Q in E2": (poly_quotient("x^2 - 2"), [[1, 0]]),
    "diagonals in M2": (matrix_algebra(2), [[1, 0, 0, 0], [0, 0, 0, 1]]),
    "Q in Q": (matrix_algebra(1), [[1]]),
}


@pytest.mark.parametrize("name", sorted(EXTENSIONS))
def test_galois_bialgebroid_counit_and_takeuchi(name):
    algebra, basis = EXTENSIONS[name]
    galois = galois_bialgebroid(algebra, Subspace.span(basis, algebra.dim))
    report = check_left_bialgebroid(galois)
    assert report.passed, report.to_table()
    assert report.clause("Takeuchi condition").passed
    assert galois.pi(galois.total.unit_sparse()) == galois.base.unit_sparse()


def test_galois_bialgebroid_of_the_trivial_extension():
    galois = galois_bialgebroid(matrix_algebra(1), Subspace.full(1))
    assert galois.total.dim == 1
    assert galois.base.dim == 1
    assert galois.tensor_square.dim == 1


def test_galois_bialgebroid_of_the_diagonals_in_m2():
    m2 = matrix_algebra(2)
    galois = galois_bialgebroid(m2, Subspace.span([[1, 0, 0, 0], [0, 0, 0, 1]], 4))
    # one projection per matrix unit, over the diagonal centralizer
    assert galois.total.dim == 4
    assert galois.base.dim == 2
    # P_ab (x) P_cd survives exactly when b = c
    assert galois.tensor_square.dim == 8


def test_trivial_deformation_preserves_the_bialgebroid(universal_e2):
    deformed = deform(universal_e2, universal_e2.algebra.one()).wba
    assert deformation_preserves_bialgebroid(universal_e2, deformed).passed


def test_separability_structures():
    q2 = diagonal_algebra(2)
    structure = separability_from_functional(q2, [1, 1])
    assert structure.quasibasis == {0: 1, 3: 1}
    assert structure.functional({0: 3, 1: 4}) == 7
    with pytest.raises(IndexNotOne):
        separability_from_functional(q2, [1, 2])
    with pytest.raises(DegenerateFunctional):
        separability_from_functional(poly_quotient("x^2 - 2"), [0, 0])


def test_counit_restricted_to_the_base(universal_e2):
    bialgebroid = beta_l(universal_e2)
    structure = counit_separability(universal_e2, bialgebroid)
    assert structure.psi == (QQ(2), QQ(0))
    lifted = lift_to_wba(bialgebroid, structure)
    assert lifted.epsilon == universal_e2.epsilon
