"""Weak antipode identities."""

import logging
from typing import Optional

from ..linalg.matrix import Matrix
from ..linalg.tensor import flip_vector
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport
from .weak_bialgebra import CanonicalSubalgebras, WeakBialgebra, WeakHopfAlgebra, canonical_subalgebras

logger = logging.getLogger(__name__)


def check_antipode(
    wba: WeakBialgebra,
    antipode: Optional[Matrix] = None,
    canonical: Optional[CanonicalSubalgebras] = None,
) -> CheckReport:
    """
    Check S(w_1) w_2 = Pi^R(w), w_1 S(w_2) = Pi^L(w) and S(w_1) w_2 S(w_3) = S(w) on
    every basis vector.

    Involutivity, anti-multiplicativity and anti-comultiplicativity are reported as
    informative clauses.
    """
    if antipode is None:
        if not isinstance(wba, WeakHopfAlgebra):
            raise ValueError(f"{wba.name} carries no antipode")
        antipode = wba.antipode
    canonical = canonical or canonical_subalgebras(wba)
    algebra = wba.algebra
    n = wba.dim
    report = CheckReport(subject=f"antipode of {wba.name}")
    images = antipode.sparse_columns()

    def s(v: SparseVector) -> SparseVector:
        return antipode.apply_sparse(v)

    # S(w_1) w_2 and w_1 S(w_2) for every basis vector
    s_first = []
    s_second = []
    for w in range(n):
        lhs_right: SparseVector = {}
        lhs_left: SparseVector = {}
        for (a, b), c in wba.coalgebra.pairs_of(w).items():
            for k, d in algebra.multiply_sparse(images[a], {b: 1}).items():
                accumulate(lhs_right, k, c * d)
            for k, d in algebra.multiply_sparse({a: 1}, images[b]).items():
                accumulate(lhs_left, k, c * d)
        s_first.append(lhs_right)
        s_second.append(lhs_left)

    right = [w for w in range(n) if s_first[w] != canonical.piR.sparse_column(w)]
    left = [w for w in range(n) if s_second[w] != canonical.piL.sparse_column(w)]
    sandwich = []
    for w in range(n):
        total: SparseVector = {}
        for (a, b), c in wba.coalgebra.pairs_of(w).items():
            for k, d in algebra.multiply_sparse(s_first[a], images[b]).items():
                accumulate(total, k, c * d)
        if total != images[w]:
            sandwich.append(w)
    report.expect("S(w1) w2 = Pi^R(w)", not right, right[0] if right else None, violations=len(right))
    report.expect("w1 S(w2) = Pi^L(w)", not left, left[0] if left else None, violations=len(left))
    report.expect("S(w1) w2 S(w3) = S(w)", not sandwich, sandwich[0] if sandwich else None, violations=len(sandwich))

    report.inform("S^2 = id", (antipode @ antipode).is_identity())
    anti = None
    for i in range(n):
        for j in range(n):
            if s(algebra.product(i, j)) != algebra.multiply_sparse(images[j], images[i]):
                anti = [i, j]
                break
        if anti:
            break
    report.inform("S anti-multiplicative", anti is None, anti)
    anti_co = None
    for w in range(n):
        lhs = wba.comultiply(images[w])
        # (S (x) S) flip Delta(w)
        flipped = flip_vector(wba.coalgebra.delta_of(w), n, n)
        rhs: SparseVector = {}
        for flat, c in flipped.items():
            a, b = divmod(flat, n)
            for p, x in images[a].items():
                for q, y in images[b].items():
                    accumulate(rhs, p * n + q, c * x * y)
        if lhs != rhs:
            anti_co = w
            break
    report.inform("S anti-comultiplicative", anti_co is None, anti_co)
    logger.info(f"Antipode of {wba.name}: {'pass' if report.passed else 'FAIL'}")
    return report
