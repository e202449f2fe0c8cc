"""The universal weak Hopf algebra on End(E) of a separable extension E/Q."""

import logging
from typing import Dict, List, Optional, Tuple

from ..algebra.constructors import matrix_algebra
from ..algebra.structure import Element
from ..linalg.matrix import Matrix
from ..linalg.rational import Scalar
from ..linalg.subspace import Subspace, solve_many
from ..linalg.tensor import reshape
from ..linalg.vectors import SparseVector, accumulate
from ..wba.coalgebra import Coalgebra
from ..wba.weak_bialgebra import WeakHopfAlgebra
from .number_field import NumberField, TraceForm, trace_form

logger = logging.getLogger(__name__)


def flatten_operator(matrix: Matrix) -> SparseVector:
    """An operator on E as End(E) coordinates, entry (a, b) at index a * n + b."""
    n = matrix.rows
    return {a * n + b: c for a, b, c in matrix.nonzero()}


def unflatten_operator(coords: SparseVector, n: int) -> Matrix:
    data: Dict[int, Dict[int, object]] = {}
    for flat, c in coords.items():
        a, b = divmod(flat, n)
        data.setdefault(a, {})[b] = c
    return Matrix(n, n, data)


def multiplication_operator(field: NumberField, z: SparseVector) -> SparseVector:
    """lambda(z) in End(E) coordinates."""
    return flatten_operator(field.algebra.left_matrix(z))


def multiplication_subspace(field: NumberField, sub: Optional[Subspace] = None) -> Subspace:
    """lambda(F) inside End(E) for a subspace F of E (all of E by default)."""
    n = field.degree
    sub = sub or Subspace.full(n)
    vectors = [multiplication_operator(field, dict(sub.basis.row_items(k))) for k in range(sub.dim)]
    return Subspace.span_sparse(vectors, n * n)


def universal_wha(field: NumberField, form: Optional[TraceForm] = None) -> WeakHopfAlgebra:
    """
    End(E) with
        Delta(a) = sum_{i,j} [x_i tau(y_j .)] (x) [y_i a(x_j .)],
        eps(a) = tau(a(1)),
        S(a) = sum_i x_i tau(a(y_i) .),
    for the trace quasibasis (x_i, y_i).
    """
    form = form or trace_form(field)
    algebra = field.algebra
    n = field.degree
    size = n * n
    tau = form.tau
    pairs = form.pairs

    # z -> x_i tau(y_j z): column vector x_i times the row of tau . L_{y_j}
    trace_rows: List[SparseVector] = []
    for _, dual in pairs:
        row: SparseVector = {}
        for q in range(n):
            value = form.apply(algebra.multiply_sparse(dual, {q: 1}))
            if value:
                row[q] = value
        trace_rows.append(row)
    left_legs: Dict[Tuple[int, int], SparseVector] = {}
    for i, (x_i, _) in enumerate(pairs):
        for j in range(n):
            left_legs[(i, j)] = {p * n + q: c * d for p, c in x_i.items() for q, d in trace_rows[j].items()}

    dual_columns = [algebra.left_matrix(dual).sparse_columns() for _, dual in pairs]
    basis_rows = [[dict(algebra.left_matrix(x_j).row_items(b)) for b in range(n)] for x_j, _ in pairs]

    data: Dict[int, Dict[int, object]] = {}
    for a in range(n):
        for b in range(n):
            column = a * n + b
            delta: SparseVector = {}
            for i in range(n):
                # y_i . e_ab . x_j has entries L_{y_i}[p][a] L_{x_j}[b][q]
                left_factor = dual_columns[i][a]
                if not left_factor:
                    continue
                for j in range(n):
                    right_factor = basis_rows[j][b]
                    if not right_factor:
                        continue
                    for first, c in left_legs[(i, j)].items():
                        for p, d in left_factor.items():
                            for q, e in right_factor.items():
                                accumulate(delta, first * size + p * n + q, c * d * e)
            for flat, c in delta.items():
                data.setdefault(flat, {})[column] = c
    delta_matrix = Matrix(size * size, size, data)

    unit = algebra.unit
    epsilon = [unit[b] * tau[a] for a in range(n) for b in range(n)]

    # S(e_ab) = sum_{p,q} (G^-1)_{pb} G_{aq} e_pq, the transpose for the trace form
    antipode_data: Dict[int, Dict[int, object]] = {}
    gram = form.gram
    inverse = form.gram_inverse
    for a in range(n):
        for b in range(n):
            for p in range(n):
                g = inverse[p, b]
                if not g:
                    continue
                for q, h in gram.row_items(a):
                    antipode_data.setdefault(p * n + q, {})[a * n + b] = g * h
    antipode = Matrix(size, size, antipode_data)

    endomorphisms = matrix_algebra(n)
    result = WeakHopfAlgebra(
        endomorphisms, Coalgebra(delta_matrix, epsilon), antipode, name=f"End({field.name})"
    )
    logger.info(f"Universal weak Hopf algebra of {field.name}: dimension {size}")
    return result


def operator_element(universal: WeakHopfAlgebra, matrix: Matrix) -> Element:
    coords = flatten_operator(matrix)
    return universal.algebra.element([coords.get(k, 0) for k in range(universal.dim)])


def multiplication_form(field: NumberField, tensor: SparseVector) -> Optional[Dict[Tuple[int, int], Scalar]]:
    """
    Coefficients c_kl with tensor = sum c_kl lambda(x^k) (x) lambda(x^l), or None when
    the tensor is not in lambda(E) (x) lambda(E).
    """
    n = field.degree
    size = n * n
    powers = Matrix.from_sparse_columns([multiplication_operator(field, {k: 1}) for k in range(n)], size)
    # tensor = P C P^T with P the columns lambda(x^k)
    first = solve_many(powers, reshape(tensor, size, size))
    if first is None:
        return None
    coefficients = solve_many(powers, first.transpose())
    if coefficients is None:
        return None
    return {(k, l): c for l, k, c in coefficients.nonzero()}
