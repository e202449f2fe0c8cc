"""Shared fields, weak Hopf algebras and the trigonometric bundle; all built once per session."""

import pytest

from src.fields import number_field, trig_example, universal_wha
from src.linalg import Subspace
from src.morphisms import blow_up
from src.wba import cyclic_group_hopf

POLYNOMIALS = {
    "e2": "x^2 - 2",
    "gauss": "x^2 + 1",
    "e3": "x^3 - 2",
    "e4": "x^4 - 2",
}


@pytest.fixture(scope="session")
def fields():
    return {name: number_field(p) for name, p in POLYNOMIALS.items()}


@pytest.fixture(scope="session")
def universals(fields):
    return {name: universal_wha(field) for name, field in fields.items()}


@pytest.fixture(scope="session")
def e2(fields):
    return fields["e2"]


@pytest.fixture(scope="session")
def e4(fields):
    return fields["e4"]


@pytest.fixture(scope="session")
def universal_e2(universals):
    return universals["e2"]


@pytest.fixture(scope="session")
def universal_e4(universals):
    return universals["e4"]


@pytest.fixture(scope="session")
def z2():
    return cyclic_group_hopf(2)


@pytest.fixture(scope="session")
def blow_ups(z2):
    return {n: blow_up(z2, n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def trig():
    return trig_example()


@pytest.fixture(scope="session")
def e4_subfields(e4):
    """Q, Q(sqrt 2) = span{1, x^2} and E_4 as subspaces of E_4."""
    return {
        "Q": Subspace.span([[1, 0, 0, 0]], 4),
        "Q(sqrt2)": Subspace.span([[1, 0, 0, 0], [0, 0, 1, 0]], 4),
        "E4": Subspace.full(4),
    }
