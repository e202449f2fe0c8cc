"""Coalgebras given by a comultiplication matrix and a counit vector."""

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import DimensionMismatch
from ..linalg.matrix import Matrix
from ..linalg.rational import ZERO, RationalLike, Scalar, to_rational
from ..linalg.tensor import flip_matrix
from ..linalg.vectors import SparseVector, Vector, accumulate
from ..report import CheckReport

logger = logging.getLogger(__name__)

LegTensor = Dict[Tuple[int, ...], Scalar]


class Coalgebra:
    """
    Comultiplication as a (dim^2 x dim) matrix whose column w is the flat vector of
    Delta(e_w), and the counit as a row vector.
    """

    def __init__(self, delta: Matrix, epsilon: Sequence[RationalLike]):
        n = len(epsilon)
        if delta.shape != (n * n, n):
            raise DimensionMismatch(f"Comultiplication of shape {delta.shape} for counit of length {n}")
        self._dim = n
        self._delta = delta
        self._epsilon: Vector = tuple(to_rational(v) for v in epsilon)
        self._columns = delta.sparse_columns()
        self._pairs: List[LegTensor] = [{divmod(flat, n): c for flat, c in column.items()} for column in self._columns]

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def delta(self) -> Matrix:
        return self._delta

    @property
    def epsilon(self) -> Vector:
        return self._epsilon

    def delta_of(self, w: int) -> SparseVector:
        return self._columns[w]

    def pairs_of(self, w: int) -> LegTensor:
        return self._pairs[w]

    def comultiply(self, v: Mapping[int, Scalar]) -> SparseVector:
        result: SparseVector = {}
        for w, c in v.items():
            for flat, d in self._columns[w].items():
                accumulate(result, flat, c * d)
        return result

    def counit(self, v: Mapping[int, Scalar]) -> Scalar:
        total = ZERO
        for w, c in v.items():
            total += c * self._epsilon[w]
        return total

    def pairs(self, v: Mapping[int, Scalar]) -> LegTensor:
        """Delta(v) keyed by (first leg, second leg)."""
        n = self._dim
        return {divmod(flat, n): c for flat, c in self.comultiply(v).items()}

    def iterate(self, v: Mapping[int, Scalar]) -> LegTensor:
        """(Delta (x) id) Delta(v) keyed by leg triples."""
        result: LegTensor = {}
        for (i, j), c in self.pairs(v).items():
            for (a, b), d in self.pairs_of(i).items():
                accumulate(result, (a, b, j), c * d)
        return result

    def flipped(self) -> "Coalgebra":
        """The opposite comultiplication flip . Delta."""
        return Coalgebra(flip_matrix(self._dim, self._dim) @ self._delta, self._epsilon)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return self._delta == other._delta and self._epsilon == other._epsilon

    def __hash__(self) -> int:
        return hash((self._delta, self._epsilon))


def check_coalgebra(coalgebra: Coalgebra, report: Optional[CheckReport] = None) -> CheckReport:
    """Coassociativity and both counit laws on every basis vector."""
    report = report or CheckReport(subject="coalgebra")
    coassoc = []
    left = []
    right = []
    for w in range(coalgebra.dim):
        pairs = coalgebra.pairs_of(w)
        first: LegTensor = {}
        second: LegTensor = {}
        for (i, j), c in pairs.items():
            for (a, b), d in coalgebra.pairs_of(i).items():
                accumulate(first, (a, b, j), c * d)
            for (a, b), d in coalgebra.pairs_of(j).items():
                accumulate(second, (i, a, b), c * d)
        if first != second:
            coassoc.append(w)
        left_side: SparseVector = {}
        right_side: SparseVector = {}
        for (i, j), c in pairs.items():
            if coalgebra.epsilon[i] != 0:
                accumulate(left_side, j, coalgebra.epsilon[i] * c)
            if coalgebra.epsilon[j] != 0:
                accumulate(right_side, i, coalgebra.epsilon[j] * c)
        if left_side != {w: 1}:
            left.append(w)
        if right_side != {w: 1}:
            right.append(w)
    report.expect("coassociativity", not coassoc, coassoc[0] if coassoc else None, violations=len(coassoc))
    report.expect("left counit", not left, left[0] if left else None, violations=len(left))
    report.expect("right counit", not right, right[0] if right else None, violations=len(right))
    return report
