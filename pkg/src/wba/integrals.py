"""Left and right integrals, Haar integrals."""

import logging
from typing import Optional

from ..algebra.structure import Element
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace, kernel
from ..report import CheckReport
from .weak_bialgebra import CanonicalSubalgebras, WeakBialgebra, WeakHopfAlgebra, canonical_subalgebras

logger = logging.getLogger(__name__)


def left_integrals(wba: WeakBialgebra, canonical: Optional[CanonicalSubalgebras] = None) -> Subspace:
    """{l : w l = Pi^L(w) l for every w}"""
    canonical = canonical or canonical_subalgebras(wba)
    algebra = wba.algebra
    blocks = [
        algebra.left_matrix({w: 1}) - algebra.left_matrix(canonical.piL.sparse_column(w))
        for w in range(wba.dim)
    ]
    result = kernel(Matrix.vstack(*blocks))
    logger.debug(f"Left integrals of {wba.name}: dimension {result.dim}")
    return result


def right_integrals(wba: WeakBialgebra, canonical: Optional[CanonicalSubalgebras] = None) -> Subspace:
    """{r : r w = r Pi^R(w) for every w}"""
    canonical = canonical or canonical_subalgebras(wba)
    algebra = wba.algebra
    blocks = [
        algebra.right_matrix({w: 1}) - algebra.right_matrix(canonical.piR.sparse_column(w))
        for w in range(wba.dim)
    ]
    return kernel(Matrix.vstack(*blocks))


def haar_check(wba: WeakBialgebra, h: Element, antipode: Optional[Matrix] = None) -> CheckReport:
    """h is a two-sided integral with Pi^L(h) = Pi^R(h) = 1, and S(h) = h when S is known."""
    canonical = canonical_subalgebras(wba)
    if antipode is None and isinstance(wba, WeakHopfAlgebra):
        antipode = wba.antipode
    report = CheckReport(subject=f"Haar integral of {wba.name}")
    report.expect("left integral", left_integrals(wba, canonical).contains(h.coords))
    report.expect("right integral", right_integrals(wba, canonical).contains(h.coords))
    report.expect("Pi^L(h) = 1", canonical.piL.apply(h.coords) == wba.algebra.unit)
    report.expect("Pi^R(h) = 1", canonical.piR.apply(h.coords) == wba.algebra.unit)
    if antipode is not None:
        report.expect("S(h) = h", antipode.apply(h.coords) == h.coords)
    return report
