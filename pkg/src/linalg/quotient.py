"""Quotient spaces V / U with a pivot-chosen complement."""

import logging
from typing import List, Sequence

from .matrix import Matrix
from .rational import Scalar
from .subspace import Subspace
from .vectors import SparseVector, Vector

logger = logging.getLogger(__name__)


class QuotientSpace:
    """
    Quotient of Q^n by a relation subspace.

    The complement is spanned by the unit vectors at the non-pivot positions of the
    relation basis, so the projection of v is read off after eliminating the pivots.
    """

    def __init__(self, relations: Subspace):
        self.relations = relations
        pivots = set(relations.pivots)
        self.complement: List[int] = [j for j in range(relations.ambient_dim) if j not in pivots]
        self._position = {j: k for k, j in enumerate(self.complement)}
        logger.debug(f"Quotient of dimension {self.dim} ({relations.ambient_dim} - {relations.dim})")

    @property
    def ambient_dim(self) -> int:
        return self.relations.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project_sparse(self, vector: SparseVector) -> SparseVector:
        remainder = self.relations.reduce_sparse(vector)
        return {self._position[j]: c for j, c in remainder.items()}

    def project(self, vector: Sequence[Scalar]) -> Vector:
        coords = self.project_sparse({i: v for i, v in enumerate(vector) if v != 0})
        return tuple(coords.get(k, 0) for k in range(self.dim))

    def lift_sparse(self, coords: SparseVector) -> SparseVector:
        """Section: class coordinates to the complement representative."""
        return {self.complement[k]: c for k, c in coords.items()}

    def same_class(self, u: SparseVector, v: SparseVector) -> bool:
        difference = dict(u)
        for j, c in v.items():
            total = difference.get(j, 0) - c
            if total == 0:
                difference.pop(j, None)
            else:
                difference[j] = total
        return self.relations.contains_sparse(difference)

    def projection_matrix(self) -> Matrix:
        """The epimorphism tau as a (dim x ambient_dim) matrix."""
        columns = [self.project_sparse({j: 1}) for j in range(self.ambient_dim)]
        return Matrix.from_sparse_columns(columns, self.dim)

    def section_matrix(self) -> Matrix:
        return Matrix(self.ambient_dim, self.dim, {j: {k: 1} for k, j in enumerate(self.complement)})
