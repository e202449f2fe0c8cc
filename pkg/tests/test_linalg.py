"""Exact rational linear algebra: scalars, matrices, kernels, quotients and tensor legs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from src.errors import DimensionMismatch, NotInvertible
from src.linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    apply_legs,
    flip_matrix,
    format_rational,
    inverse,
    kernel,
    kron,
    parse_rational,
    rank,
    reshape,
    solve,
    solve_many,
    tensor_square_contains,
    to_rational,
)

small = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda entries: Matrix.from_rows(entries, cols=cols)
    )


shapes = st.tuples(st.integers(1, 4), st.integers(1, 4))


# -- scalars ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("3/6", QQ(1, 2)), ("-4/2", QQ(-2)), ("7", QQ(7)), (" +5 / 10 ", QQ(1, 2)), ("0/3", QQ(0))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1/0", "x", "", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(QQ(1, 2)) == "1/2"
    assert format_rational(QQ(-6, 3)) == "-2"
    assert format_rational("4/8") == "1/2"


def test_to_rational_refuses_floats_and_booleans():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


# -- matrices -----------------------------------------------------------------------


def test_matrix_basics():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert m.transpose() == Matrix.from_rows([[1, 3], [2, 4]])
    assert m @ Matrix.identity(2) == m
    assert (m - m).is_zero()
    assert m.to_strings() == [["1", "2"], ["3", "4"]]
    assert Matrix.diagonal([1, 1, 1]).is_identity()


def test_matrix_holds_every_entry_row_major():
    m = Matrix(2, 3, {1: {2: 5}})
    assert m.row(0) == (0, 0, 0)
    assert all(len(m.row(i)) == m.cols for i in range(m.rows))
    assert m.columns()[2] == (0, 5)
    assert list(m.nonzero()) == [(1, 2, 5)]
    assert m.nonzero_rows() == [1]
    assert Matrix.hstack(Matrix.identity(2), m.select_columns([2])) == Matrix.from_rows([[1, 0, 0], [0, 1, 5]])
    assert Matrix.from_rows([[1, 2]]).kron(Matrix.identity(2)) == Matrix.from_rows([[1, 0, 2, 0], [0, 1, 0, 2]])
    assert Matrix.zeros(0, 3).transpose().shape == (3, 0)


def test_matrix_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) + Matrix.identity(3)


def test_solve_and_inverse():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert solve(m, [5, 6]) == (QQ(-4), QQ(9, 2))
    assert inverse(m) @ m == Matrix.identity(2)
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None
    with pytest.raises(NotInvertible):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_kernel_of_a_row():
    assert kernel(Matrix.from_rows([[1, 1]])) == Subspace.span([[1, -1]], 2)


def test_subspace_operations():
    plane = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    line = Subspace.span([[1, 1, 0]], 3)
    other = Subspace.span([[0, 0, 1]], 3)
    assert line <= plane
    assert not other <= plane
    assert (plane + other) == Subspace.full(3)
    assert plane.intersection(Subspace.span([[1, 1, 1], [0, 0, 1]], 3)) == line
    assert plane.coordinates([2, 3, 0]) == (QQ(2), QQ(3))
    assert plane.contains([5, -1, 0])
    assert not plane.contains([0, 0, 1])


def test_quotient_space():
    quotient = QuotientSpace(Subspace.span([[1, -1, 0]], 3))
    assert quotient.dim == 2
    assert quotient.same_class({0: 1}, {1: 1})
    assert not quotient.same_class({0: 1}, {2: 1})
    assert quotient.projection_matrix() @ quotient.section_matrix() == Matrix.identity(2)


def test_flip_and_reshape():
    flip = flip_matrix(2, 3)
    assert flip.shape == (6, 6)
    # e_0 (x) e_2 -> e_2 (x) e_0
    assert flip.apply_sparse({0 * 3 + 2: 1}) == {2 * 2 + 0: 1}
    assert reshape({1: 5, 2: 7}, 2, 2) == Matrix.from_rows([[0, 5], [7, 0]])


def test_tensor_square_contains():
    line = Subspace.span([[1, 1]], 2)
    assert tensor_square_contains(line, {0: 1, 1: 1, 2: 1, 3: 1})
    assert not tensor_square_contains(line, {0: 1})


# -- property suites ----------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(shapes.flatmap(lambda s: matrices(*s)))
def test_rank_nullity(m):
    null = kernel(m)
    assert null.dim + rank(m) == m.cols
    for k in range(null.dim):
        assert not m.apply_sparse(dict(null.basis.row_items(k)))


@settings(max_examples=200, deadline=None)
@given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=200, deadline=None)
@given(matrices(2, 3), matrices(3, 2), st.lists(small, min_size=6, max_size=6))
def test_apply_legs_matches_kron(f, g, entries):
    vector = {i: QQ(v) for i, v in enumerate(entries) if v}
    assert apply_legs(f, g, vector) == kron(f, g).apply_sparse(vector)


@settings(max_examples=200, deadline=None)
@given(matrices(3, 3), matrices(3, 2))
def test_solve_many_solves(a, b):
    x = solve_many(a, b)
    if x is None:
        assert rank(Matrix.hstack(a, b)) > rank(a)
    else:
        assert a @ x == b


@settings(max_examples=200, deadline=None)
@given(matrices(3, 4), matrices(2, 4))
def test_subspace_sum_and_intersection_dimensions(a, b):
    first = Subspace.row_space(a)
    second = Subspace.row_space(b)
    total = first + second
    meet = first.intersection(second)
    assert total.dim + meet.dim == first.dim + second.dim
    assert meet <= first and meet <= second
    assert first <= total and second <= total
