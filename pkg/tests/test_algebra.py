"""Structure-constant algebras, algebra maps, inverses, commutants and subalgebras."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from src.algebra import (
    AlgebraMap,
    algebra_closure,
    algebra_from_array,
    center,
    check_algebra,
    check_algebra_map,
    commutant,
    compose_maps,
    diagonal_algebra,
    group_algebra_cyclic,
    invert,
    is_invertible,
    is_subalgebra,
    matrix_algebra,
    opposite,
    poly_quotient,
    subalgebra,
    tensor_algebra,
)
from src.errors import InvalidPolynomial, NotInSubalgebra, NotInvertible
from src.linalg import Matrix, Subspace

coefficients = st.integers(min_value=-5, max_value=5)


@pytest.mark.parametrize(
    "algebra",
    [
        poly_quotient("x^3 - 2"),
        matrix_algebra(2),
        diagonal_algebra(3),
        group_algebra_cyclic(3),
        tensor_algebra(group_algebra_cyclic(2), matrix_algebra(2)),
        opposite(matrix_algebra(2)),
    ],
    ids=lambda a: a.name,
)
def test_standard_algebras_are_associative_and_unital(algebra):
    report = check_algebra(algebra)
    assert report.passed, report.to_table()


def test_poly_quotient_products():
    e2 = poly_quotient("x^2 - 2")
    assert e2.dim == 2
    assert e2.product(1, 1) == {0: 2}
    assert e2.basis_names == ["1", "x"]
    e4 = poly_quotient([-2, 0, 0, 0, 1])
    assert e4.product(2, 3) == {1: 2}


@pytest.mark.parametrize("text", ["2*x^2 - 1", "x^2 - 1/2", "3", "x^2 +"])
def test_poly_quotient_rejects(text):
    with pytest.raises(InvalidPolynomial):
        poly_quotient(text)


@pytest.mark.parametrize(
    "text",
    ["__import__('os').system('touch marker') or x^2-2", "x.__class__", "y^2 - 2", "x^2 - 2.5", "exp(x)"],
)
def test_polynomial_text_outside_the_alphabet_is_never_evaluated(text, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(InvalidPolynomial):
        poly_quotient(text)
    assert not (tmp_path / "marker").exists()


def test_polynomial_text_with_parentheses_and_fractions():
    e2 = poly_quotient("(x - 1)*(x + 1) - 2/2")
    assert e2.product(1, 1) == {0: 2}


def test_matrix_units_multiply():
    m2 = matrix_algebra(2)
    # e12 e21 = e11, e21 e12 = e22, e11 e22 = 0
    assert m2.product(1, 2) == {0: 1}
    assert m2.product(2, 1) == {3: 1}
    assert m2.product(0, 3) == {}
    assert m2.unit == (1, 0, 0, 1)


def test_non_associative_table_fails():
    # e1 e1 = e2 and e1 e2 = e1 while e2 e1 = 0
    mult = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    report = check_algebra(algebra_from_array(mult, [1, 0, 0]))
    assert not report.passed
    assert not report.clause("associativity").passed
    assert report.clause("associativity").witness is not None


def test_invert():
    e2 = poly_quotient("x^2 - 2")
    x = e2.basis_element(1)
    assert invert(e2, x).coords == (0, QQ(1, 2))
    q2 = diagonal_algebra(2)
    with pytest.raises(NotInvertible):
        invert(q2, q2.basis_element(0))
    assert not is_invertible(q2, q2.basis_element(0))
    assert is_invertible(q2, q2.one())


def test_commutant_and_center():
    m2 = matrix_algebra(2)
    assert center(m2) == Subspace.span([m2.unit], 4)
    diagonal = Subspace.span([[1, 0, 0, 0], [0, 0, 0, 1]], 4)
    assert commutant(m2, diagonal) == diagonal


def test_subalgebra_of_e4():
    e4 = poly_quotient("x^4 - 2")
    sqrt2 = Subspace.span([[1, 0, 0, 0], [0, 0, 1, 0]], 4)
    assert is_subalgebra(e4, sqrt2)
    assert algebra_closure(e4, Subspace.span([[0, 0, 1, 0]], 4)) == sqrt2
    sub, inclusion = subalgebra(e4, sqrt2)
    assert sub.dim == 2
    assert sub.product(1, 1) == {0: 2}
    assert check_algebra_map(inclusion).passed
    with pytest.raises(NotInSubalgebra):
        subalgebra(e4, Subspace.span([[0, 1, 0, 0]], 4))


def test_algebra_maps():
    z2 = group_algebra_cyclic(2)
    q2 = diagonal_algebra(2)
    characters = AlgebraMap(z2, q2, Matrix.from_rows([[1, 1], [1, -1]]), name="characters")
    assert check_algebra_map(characters).passed
    broken = AlgebraMap(z2, q2, Matrix.from_rows([[1, 2], [1, 2]]))
    report = check_algebra_map(broken)
    assert not report.clause("multiplicative").passed
    transpose = AlgebraMap(
        matrix_algebra(2), matrix_algebra(2), Matrix.from_columns([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    )
    assert check_algebra_map(transpose, anti=True).passed
    assert not check_algebra_map(transpose).passed
    assert compose_maps(transpose, transpose).matrix.is_identity()


@settings(max_examples=200, deadline=None)
@given(*(st.lists(coefficients, min_size=3, max_size=3) for _ in range(3)))
def test_e3_associative_on_elements(u, v, w):
    e3 = poly_quotient("x^3 - 2")
    a, b, c = e3.element(u), e3.element(v), e3.element(w)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=200, deadline=None)
@given(st.lists(coefficients, min_size=4, max_size=4), st.lists(coefficients, min_size=4, max_size=4))
def test_left_regular_representation_is_multiplicative(u, v):
    m2 = matrix_algebra(2)
    a, b = m2.element(u), m2.element(v)
    assert m2.left_matrix(a.sparse()) @ m2.left_matrix(b.sparse()) == m2.left_matrix((a * b).sparse())
