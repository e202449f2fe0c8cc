"""The base tensor square A (x)_R A and its triple counterpart."""

import logging
from typing import Dict, List, Optional

from ..algebra.structure import FinDimAlgebra
from ..linalg.matrix import Matrix
from ..linalg.quotient import QuotientSpace
from ..linalg.subspace import Subspace
from ..linalg.vectors import SparseVector, accumulate

logger = logging.getLogger(__name__)


class BaseTensorSquare:
    """
    A (x)_R A for a total algebra A with source s and target t from a base R.

    The relation subspace is spanned by t(r) a (x) a' - a (x) s(r) a' over basis
    vectors r, a, a'. Classes are represented by complement coordinates.
    """

    def __init__(self, total: FinDimAlgebra, source: Matrix, target: Matrix):
        self.total = total
        self.source = source
        self.target = target
        n = total.dim
        self._source_images = [source.sparse_column(r) for r in range(source.cols)]
        self._target_images = [target.sparse_column(r) for r in range(target.cols)]
        self._left_t = [total.left_matrix(t) for t in self._target_images]
        self._left_s = [total.left_matrix(s) for s in self._source_images]
        rows: List[SparseVector] = []
        for t_left, s_left in zip(self._left_t, self._left_s):
            t_columns = t_left.sparse_columns()
            s_columns = s_left.sparse_columns()
            for a in range(n):
                for b in range(n):
                    relation: SparseVector = {}
                    for k, c in t_columns[a].items():
                        accumulate(relation, k * n + b, c)
                    for k, c in s_columns[b].items():
                        accumulate(relation, a * n + k, -c)
                    if relation:
                        rows.append(relation)
        self.relations = Subspace.span_sparse(rows, n * n)
        self.quotient = QuotientSpace(self.relations)
        self._projection: Optional[Matrix] = None
        self._triple: Optional[QuotientSpace] = None
        logger.debug(f"Base tensor square of {total.name}: {n * n} -> {self.dim} (relations {self.relations.dim})")

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def base_dim(self) -> int:
        return self.source.cols

    def project(self, vector: SparseVector) -> SparseVector:
        return self.quotient.project_sparse(vector)

    def section(self, coords: SparseVector) -> SparseVector:
        return self.quotient.lift_sparse(coords)

    def same_class(self, u: SparseVector, v: SparseVector) -> bool:
        return self.quotient.same_class(u, v)

    def projection_matrix(self) -> Matrix:
        """tau: A (x) A -> A (x)_R A"""
        if self._projection is None:
            self._projection = self.quotient.projection_matrix()
        return self._projection

    def section_matrix(self) -> Matrix:
        return self.quotient.section_matrix()

    def right_action(self, r: int) -> Matrix:
        """X -> X . r = (1 (x) t(r)) X on classes."""
        n = self.total.dim
        columns = []
        for k in range(self.dim):
            rep = self.section({k: 1})
            moved: SparseVector = {}
            for flat, c in rep.items():
                a, b = divmod(flat, n)
                for j, d in self._left_t[r].sparse_column(b).items():
                    accumulate(moved, a * n + j, c * d)
            columns.append(self.project(moved))
        return Matrix.from_sparse_columns(columns, self.dim)

    def triple(self) -> QuotientSpace:
        """
        A (x)_R A (x)_R A as the quotient of (A (x)_R A) (x) A by
        X . r (x) a - X (x) s(r) a, flat index class * dim A + a.
        """
        if self._triple is None:
            n = self.total.dim
            q = self.dim
            rows: List[SparseVector] = []
            for r in range(self.base_dim):
                action = self.right_action(r).sparse_columns()
                s_columns = self._left_s[r].sparse_columns()
                for x in range(q):
                    for a in range(n):
                        relation: SparseVector = {}
                        for y, c in action[x].items():
                            accumulate(relation, y * n + a, c)
                        for k, c in s_columns[a].items():
                            accumulate(relation, x * n + k, -c)
                        if relation:
                            rows.append(relation)
            self._triple = QuotientSpace(Subspace.span_sparse(rows, q * n))
            logger.debug(f"Triple base tensor product of {self.total.name}: dimension {self._triple.dim}")
        return self._triple

    def project_triple(self, tensor: Dict[tuple, object]) -> SparseVector:
        """Class in A (x)_R A (x)_R A of a tensor keyed by leg triples."""
        n = self.total.dim
        middle: SparseVector = {}
        for (a, b, c), value in tensor.items():
            for k, d in self.project({a * n + b: 1}).items():
                accumulate(middle, k * n + c, value * d)
        return self.triple().project_sparse(middle)
