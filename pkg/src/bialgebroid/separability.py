"""Separability structures: a nondegenerate functional of index one and its quasibasis."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..algebra.structure import FinDimAlgebra
from ..errors import ConsistencyError, DegenerateFunctional, DimensionMismatch, IndexNotOne, NotInvertible
from ..linalg.matrix import Matrix
from ..linalg.rational import RationalLike, Scalar, to_rational
from ..linalg.subspace import inverse
from ..linalg.vectors import SparseVector, accumulate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparabilityStructure:
    """
    A functional psi on R with quasibasis e = sum_i e_i (x) e^i.

    ``quasibasis`` holds the flat R (x) R vector; ``pairs`` the (e_i, e^i) split with e_i
    running over the basis of R.
    """

    algebra: FinDimAlgebra
    psi: Tuple[Scalar, ...]
    quasibasis: SparseVector
    pairs: Tuple[Tuple[SparseVector, SparseVector], ...]

    def functional(self, r: SparseVector) -> Scalar:
        return sum((self.psi[i] * c for i, c in r.items()), to_rational(0))


def separability_from_functional(algebra: FinDimAlgebra, psi: Sequence[RationalLike]) -> SeparabilityStructure:
    """
    Quasibasis of psi from the inverse of G_ij = psi(e_i e_j).

    Raises:
        DegenerateFunctional: G is singular
        IndexNotOne: sum_i e_i e^i is not the unit
    """
    n = algebra.dim
    if len(psi) != n:
        raise DimensionMismatch(f"Functional of length {len(psi)} on {algebra.name}")
    values = tuple(to_rational(v) for v in psi)

    def apply(r: SparseVector) -> Scalar:
        return sum((values[i] * c for i, c in r.items()), to_rational(0))

    gram = Matrix(n, n, {i: {j: apply(algebra.product(i, j)) for j in range(n)} for i in range(n)})
    try:
        gram_inverse = inverse(gram)
    except NotInvertible as exc:
        raise DegenerateFunctional(f"Functional {list(values)} is degenerate on {algebra.name}") from exc

    quasibasis: SparseVector = {}
    pairs: List[Tuple[SparseVector, SparseVector]] = []
    for i in range(n):
        dual = dict(gram_inverse.row_items(i))
        pairs.append(({i: to_rational(1)}, dual))
        for j, c in dual.items():
            quasibasis[i * n + j] = c

    index: SparseVector = {}
    for left, right in pairs:
        for k, c in algebra.multiply_sparse(left, right).items():
            accumulate(index, k, c)
    if index != algebra.unit_sparse():
        raise IndexNotOne(f"Functional {list(values)} on {algebra.name} has index {index}, not 1")

    for r in range(n):
        left_mult: SparseVector = {}
        right_mult: SparseVector = {}
        for e, dual in pairs:
            for k, c in algebra.multiply_sparse({r: 1}, e).items():
                for j, d in dual.items():
                    accumulate(left_mult, k * n + j, c * d)
            for j, d in algebra.multiply_sparse(dual, {r: 1}).items():
                for k, c in e.items():
                    accumulate(right_mult, k * n + j, c * d)
        if left_mult != right_mult:
            raise ConsistencyError(f"Quasibasis of {list(values)} does not commute with basis element {r} of {algebra.name}")

    logger.debug(f"Separability structure on {algebra.name} with psi = {[str(v) for v in values]}")
    return SeparabilityStructure(algebra=algebra, psi=values, quasibasis=quasibasis, pairs=tuple(pairs))
