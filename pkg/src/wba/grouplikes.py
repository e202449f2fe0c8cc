"""Left grouplike elements and the inner weak automorphisms they define."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..algebra.maps import AlgebraMap
from ..algebra.operations import invert
from ..algebra.structure import Element
from ..errors import NotGrouplike, NotInvertible
from ..linalg.vectors import SparseVector
from ..report import CheckReport
from .weak_bialgebra import CanonicalSubalgebras, WeakBialgebra, canonical_subalgebras

logger = logging.getLogger(__name__)


def _pure(u: SparseVector, v: SparseVector, n: int) -> SparseVector:
    return {i * n + j: a * b for i, a in u.items() for j, b in v.items()}


def _unit_times(wba: WeakBialgebra, g: SparseVector) -> SparseVector:
    """Delta(1)(g (x) g)"""
    return wba.algebra.multiply_tensors(wba.delta_one(), _pure(g, g, wba.dim))


def is_left_grouplike(wba: WeakBialgebra, g: Element) -> bool:
    """g is invertible and Delta(g) = Delta(1)(g (x) g)."""
    try:
        invert(wba.algebra, g)
    except NotInvertible:
        return False
    sparse = g.sparse()
    return wba.comultiply(sparse) == _unit_times(wba, sparse)


def twist_element(wba: WeakBialgebra, g: Element, canonical: Optional[CanonicalSubalgebras] = None) -> Element:
    """u = eps(g 1_1) 1_2, an element of L."""
    canonical = canonical or canonical_subalgebras(wba)
    return wba.algebra.element(canonical.tR.apply(g.coords))


@dataclass
class GrouplikeGroup:
    """Grouplike candidates that passed, those excluded with a reason, and the group report."""

    members: List[Element]
    excluded: List[Tuple[int, str]] = field(default_factory=list)
    report: CheckReport = field(default_factory=lambda: CheckReport(subject="left grouplikes"))

    def __len__(self) -> int:
        return len(self.members)


def grouplike_group(wba: WeakBialgebra, candidates: Sequence[Element]) -> GrouplikeGroup:
    """
    Filter candidates to the left grouplike ones and verify the group they form.

    Args:
        wba: weak bialgebra passing check_wba
        candidates: elements to test

    Returns:
        GrouplikeGroup whose report covers closure and the derived grouplike identities
    """
    algebra = wba.algebra
    n = wba.dim
    canonical = canonical_subalgebras(wba)
    members: List[Element] = []
    excluded: List[Tuple[int, str]] = []
    for index, g in enumerate(candidates):
        try:
            invert(algebra, g)
        except NotInvertible:
            excluded.append((index, "not invertible"))
            continue
        if wba.comultiply(g.sparse()) != _unit_times(wba, g.sparse()):
            excluded.append((index, "Delta(g) != Delta(1)(g (x) g)"))
            continue
        if any(m.coords == g.coords for m in members):
            excluded.append((index, "duplicate"))
            continue
        members.append(g)

    report = CheckReport(subject=f"left grouplikes of {wba.name}")
    coords = {m.coords for m in members}
    inverses = [invert(algebra, g) for g in members]

    closure = None
    for a, g in enumerate(members):
        for b, h in enumerate(members):
            if (g * h).coords not in coords:
                closure = [a, b]
                break
        if closure:
            break
    report.expect("closed under products", closure is None, closure)
    missing = [a for a, inverse in enumerate(inverses) if inverse.coords not in coords]
    report.expect("closed under inverses", not missing, missing[0] if missing else None)

    one = algebra.unit
    pi_left = [a for a, g in enumerate(members) if canonical.piL.apply(g.coords) != one]
    report.expect("Pi^L(g) = 1", not pi_left, pi_left[0] if pi_left else None)

    bad_inverse = [a for a, h in enumerate(inverses) if wba.comultiply(h.sparse()) != _unit_times(wba, h.sparse())]
    report.expect("Delta(g^-1) = Delta(1)(g^-1 (x) g^-1)", not bad_inverse, bad_inverse[0] if bad_inverse else None)

    twist_left, twist_right, twist_info = [], [], []
    for a, g in enumerate(members):
        u = twist_element(wba, g, canonical)
        try:
            u_inverse = invert(algebra, u)
        except NotInvertible:
            twist_left.append(a)
            twist_right.append(a)
            continue
        delta_g = wba.comultiply(g.sparse())
        lhs = algebra.multiply_tensors(_pure(g.sparse(), (g * u_inverse).sparse(), n), wba.delta_one())
        if delta_g != lhs:
            twist_left.append(a)
        shifted = g * algebra.element(canonical.piR.apply(u_inverse.coords))
        rhs = algebra.multiply_tensors(_pure(shifted.sparse(), g.sparse(), n), wba.delta_one())
        if delta_g != rhs:
            twist_right.append(a)
        if canonical.piR.apply(u.coords) != canonical.piR.apply(g.coords):
            twist_info.append(a)
    report.expect("Delta(g) = (g (x) g u^-1) Delta(1)", not twist_left, twist_left[0] if twist_left else None)
    report.expect("Delta(g) = (g Pi^R(u^-1) (x) g) Delta(1)", not twist_right, twist_right[0] if twist_right else None)
    report.inform("Pi^R(u) = Pi^R(g)", not twist_info, twist_info[0] if twist_info else None)

    conjugation_pi, conjugation_target = None, None
    target_pi = canonical.tL @ canonical.piL
    for a, (g, h) in enumerate(zip(members, inverses)):
        for w in range(n):
            e = algebra.basis_element(w)
            conjugate = (g * e * h).coords
            if conjugation_pi is None:
                expected = (g * algebra.element(canonical.piL.apply(e.coords)) * h).coords
                if canonical.piL.apply(conjugate) != expected:
                    conjugation_pi = [a, w]
            if conjugation_target is None:
                expected = (g * algebra.element(target_pi.apply(e.coords)) * h).coords
                if target_pi.apply(conjugate) != expected:
                    conjugation_target = [a, w]
    report.expect("Pi^L(g w g^-1) = g Pi^L(w) g^-1", conjugation_pi is None, conjugation_pi)
    report.expect("t^L Pi^L(g w g^-1) = g t^L Pi^L(w) g^-1", conjugation_target is None, conjugation_target)
    report.record("order", len(members))
    logger.info(f"{len(members)} left grouplike elements of {wba.name} among {len(candidates)} candidates")
    return GrouplikeGroup(members=members, excluded=excluded, report=report)


def ad_grouplike(wba: WeakBialgebra, g: Element) -> Tuple[AlgebraMap, CheckReport]:
    """
    Inner automorphism w -> g w g^-1 of a left grouplike g.

    Returns:
        (conjugation map, report on eps(g w g^-1) = eps(u w) with u = eps(g 1_1) 1_2)

    Raises:
        NotGrouplike: g fails is_left_grouplike
    """
    if not is_left_grouplike(wba, g):
        raise NotGrouplike(f"{g!r} is not left grouplike in {wba.name}")
    algebra = wba.algebra
    h = invert(algebra, g)
    matrix = algebra.left_matrix(g.sparse()) @ algebra.right_matrix(h.sparse())
    conjugation = AlgebraMap(algebra, algebra, matrix, name=f"Ad_g on {wba.name}")
    u = twist_element(wba, g)
    report = CheckReport(subject=f"inner automorphism of {wba.name}")
    witness = None
    for w in range(wba.dim):
        lhs = wba.counit(matrix.sparse_column(w))
        rhs = wba.counit(algebra.multiply_sparse(u.sparse(), {w: 1}))
        if lhs != rhs:
            witness = w
            break
    report.expect("eps(g w g^-1) = eps(u w)", witness is None, witness)
    report.record("u", u.coords)
    return conjugation, report
