"""Deformations by invertible elements of L and the tracial deformation element."""

import logging
from dataclasses import dataclass
from typing import Optional

from ..algebra.operations import invert, is_invertible
from ..algebra.structure import Element
from ..errors import NotInSubalgebra
from ..linalg.matrix import Matrix
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport
from .coalgebra import Coalgebra
from .weak_bialgebra import WeakBialgebra, WeakHopfAlgebra, check_wba, right_leg_span

logger = logging.getLogger(__name__)


@dataclass
class Deformation:
    wba: WeakBialgebra
    u: Element
    u_inverse: Element
    report: Optional[CheckReport]


def deform(wba: WeakBialgebra, u: Element, check: bool = True) -> Deformation:
    """
    Delta'(w) = (1 (x) u^-1) Delta(w), eps'(w) = eps(u w).

    Args:
        wba: weak bialgebra
        u: invertible element of L
        check: run check_wba on the result

    Raises:
        NotInSubalgebra: u is not in L
        NotInvertible: u has no inverse
    """
    algebra = wba.algebra
    if not right_leg_span(wba).contains(u.coords):
        raise NotInSubalgebra(f"{u!r} is not in L of {wba.name}")
    u_inverse = invert(algebra, u)
    n = wba.dim
    delta = Matrix.identity(n).kron(algebra.left_matrix(u_inverse.sparse())) @ wba.delta
    left_u = algebra.left_matrix(u.sparse())
    epsilon = left_u.transpose().apply(wba.epsilon)
    deformed = WeakBialgebra(algebra, Coalgebra(delta, epsilon), name=f"{wba.name} deformed")
    report = check_wba(deformed) if check else None
    if report is not None:
        logger.info(f"Deformation of {wba.name}: weak bialgebra axioms {'hold' if report.passed else 'fail'}")
    return Deformation(wba=deformed, u=u, u_inverse=u_inverse, report=report)


def tracial_deformation_element(hopf: WeakHopfAlgebra) -> Element:
    """1_2 S(1_1)"""
    algebra = hopf.algebra
    n = hopf.dim
    images = hopf.antipode.sparse_columns()
    total: SparseVector = {}
    for flat, c in hopf.delta_one().items():
        a, b = divmod(flat, n)
        for k, d in algebra.multiply_sparse({b: 1}, images[a]).items():
            accumulate(total, k, c * d)
    return algebra.element([total.get(i, 0) for i in range(n)])


def has_tracial_deformation(hopf: WeakHopfAlgebra) -> bool:
    return is_invertible(hopf.algebra, tracial_deformation_element(hopf))
