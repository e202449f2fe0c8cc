"""Axiom check, inverses, commutants and subalgebras."""

import logging
from typing import List, Tuple

from ..errors import DimensionMismatch, NotInSubalgebra, NotInvertible
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace, kernel, solve
from ..linalg.vectors import SparseVector
from ..report import CheckReport
from .maps import AlgebraMap
from .structure import Element, FinDimAlgebra

logger = logging.getLogger(__name__)


def check_algebra(algebra: FinDimAlgebra) -> CheckReport:
    """Associativity on all basis triples and both unit laws on all basis vectors."""
    report = CheckReport(subject=f"algebra {algebra.name}")
    n = algebra.dim
    failing: List[Tuple[int, int, int]] = []
    for i in range(n):
        for j in range(n):
            ij = algebra.product(i, j)
            for k in range(n):
                lhs = algebra.multiply_sparse(ij, {k: 1})
                rhs = algebra.multiply_sparse({i: 1}, algebra.product(j, k))
                if lhs != rhs:
                    failing.append((i, j, k))
    report.expect("associativity", not failing, failing[0] if failing else None, violations=len(failing))
    if failing:
        report.record("associativity violations", [list(t) for t in failing])

    unit = algebra.unit_sparse()
    left = [i for i in range(n) if algebra.multiply_sparse(unit, {i: 1}) != {i: 1}]
    right = [i for i in range(n) if algebra.multiply_sparse({i: 1}, unit) != {i: 1}]
    report.expect("left unit", not left, left[0] if left else None, violations=len(left))
    report.expect("right unit", not right, right[0] if right else None, violations=len(right))
    logger.debug(f"Checked {algebra.name}: {'pass' if report.passed else 'fail'}")
    return report


def invert(algebra: FinDimAlgebra, v: Element) -> Element:
    """
    Two-sided inverse of v.

    Solves L_v w = 1 and then verifies w v = 1 as well.

    Raises:
        NotInvertible: no two-sided inverse exists
    """
    if v.algebra.dim != algebra.dim:
        raise DimensionMismatch(f"Element of length {v.algebra.dim} in {algebra.name}")
    solution = solve(algebra.left_matrix(v.sparse()), algebra.unit)
    if solution is None:
        raise NotInvertible(f"{v!r} has no right inverse in {algebra.name}")
    w = algebra.element(solution)
    if algebra.multiply(w.coords, v.coords) != algebra.unit:
        raise NotInvertible(f"{v!r} has a right inverse but no left inverse in {algebra.name}")
    return w


def is_invertible(algebra: FinDimAlgebra, v: Element) -> bool:
    try:
        invert(algebra, v)
    except NotInvertible:
        return False
    return True


def commutant(algebra: FinDimAlgebra, subspace: Subspace) -> Subspace:
    """{a : a s = s a for every s in subspace}, as the kernel of the stacked L_s - R_s."""
    if subspace.ambient_dim != algebra.dim:
        raise DimensionMismatch(f"Subspace of ambient dimension {subspace.ambient_dim} in {algebra.name}")
    if subspace.dim == 0:
        return Subspace.full(algebra.dim)
    blocks = []
    for k in range(subspace.dim):
        s = dict(subspace.basis.row_items(k))
        # a -> s a - a s
        blocks.append(algebra.left_matrix(s) - algebra.right_matrix(s))
    result = kernel(Matrix.vstack(*blocks))
    logger.debug(f"Commutant of a {subspace.dim}-dimensional subspace of {algebra.name}: dimension {result.dim}")
    return result


def center(algebra: FinDimAlgebra) -> Subspace:
    return commutant(algebra, Subspace.full(algebra.dim))


def is_subalgebra(algebra: FinDimAlgebra, subspace: Subspace) -> bool:
    """Contains the unit and is closed under products of basis vectors."""
    if subspace.ambient_dim != algebra.dim:
        raise DimensionMismatch(f"Subspace of ambient dimension {subspace.ambient_dim} in {algebra.name}")
    if not subspace.contains(algebra.unit):
        return False
    rows = [dict(subspace.basis.row_items(k)) for k in range(subspace.dim)]
    return all(subspace.contains_sparse(algebra.multiply_sparse(u, v)) for u in rows for v in rows)


def algebra_closure(algebra: FinDimAlgebra, subspace: Subspace) -> Subspace:
    """Smallest unital subalgebra containing subspace."""
    current = subspace + Subspace.span([algebra.unit], algebra.dim)
    while True:
        rows = [dict(current.basis.row_items(k)) for k in range(current.dim)]
        products = [algebra.multiply_sparse(u, v) for u in rows for v in rows]
        grown = current + Subspace.span_sparse(products, algebra.dim)
        if grown.dim == current.dim:
            return current
        current = grown


def subalgebra(algebra: FinDimAlgebra, subspace: Subspace, name: str = "") -> Tuple[FinDimAlgebra, AlgebraMap]:
    """
    Structure constants of a unital subalgebra in its canonical basis.

    Returns:
        (subalgebra, inclusion map into the ambient algebra)

    Raises:
        NotInSubalgebra: subspace lacks the unit or is not closed under products
    """
    if not is_subalgebra(algebra, subspace):
        raise NotInSubalgebra(f"Subspace of dimension {subspace.dim} is not a unital subalgebra of {algebra.name}")
    rows: List[SparseVector] = [dict(subspace.basis.row_items(k)) for k in range(subspace.dim)]
    table = {}
    for a, u in enumerate(rows):
        for b, v in enumerate(rows):
            coords = subspace.coordinates_sparse(algebra.multiply_sparse(u, v))
            table[(a, b)] = {k: c for k, c in enumerate(coords) if c != 0}
    unit = subspace.coordinates(algebra.unit)
    sub = FinDimAlgebra(subspace.dim, table, unit, name=name or f"subalgebra of {algebra.name}")
    inclusion = AlgebraMap(sub, algebra, subspace.basis_matrix(), name=f"{sub.name} -> {algebra.name}")
    return sub, inclusion
