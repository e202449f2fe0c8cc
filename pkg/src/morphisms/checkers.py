"""Strict and weak morphisms of weak bialgebras, and maps of left bialgebroids."""

import logging
from typing import Callable, Dict, Optional

from ..algebra.maps import AlgebraMap, check_algebra_map
from ..algebra.operations import invert
from ..bialgebroid.bialgebroid import LeftBialgebroid
from ..errors import DimensionMismatch, NotInvertible
from ..linalg.matrix import Matrix
from ..linalg.subspace import image
from ..linalg.vectors import SparseVector, accumulate
from ..report import CheckReport, MorphismReport
from ..wba.weak_bialgebra import CanonicalSubalgebras, WeakBialgebra, canonical_subalgebras

logger = logging.getLogger(__name__)

KINDS = ("strict", "weak-left", "weak-right", "bialgebroid")


def _require_fit(f: AlgebraMap, source: WeakBialgebra, target: WeakBialgebra) -> None:
    if f.matrix.shape != (target.dim, source.dim):
        raise DimensionMismatch(f"Map of shape {f.matrix.shape} between {source.name} and {target.name}")


def _first_column_difference(left: Matrix, right: Matrix) -> Optional[int]:
    for _, j, _ in (left - right).nonzero():
        return j
    return None


def _count_columns(left: Matrix, right: Matrix) -> int:
    return len({j for _, j, _ in (left - right).nonzero()})


def _new_report(kind: str, f: AlgebraMap, source: WeakBialgebra, target: WeakBialgebra) -> MorphismReport:
    return MorphismReport(subject=f"{kind} morphism {source.name} -> {target.name}", kind=kind)


def check_strict_morphism(f: AlgebraMap, source: WeakBialgebra, target: WeakBialgebra) -> MorphismReport:
    """f is an algebra map and a coalgebra map."""
    _require_fit(f, source, target)
    report = _new_report("strict", f, source, target)
    report.extend(check_algebra_map(f), prefix="algebra map")
    F = f.matrix
    pushed = F.kron(F) @ source.delta
    pulled = target.delta @ F
    report.expect(
        "Delta' f = (f (x) f) Delta",
        pushed == pulled,
        _first_column_difference(pulled, pushed),
        violations=_count_columns(pulled, pushed),
    )
    counit = Matrix.row_vector(list(target.epsilon)) @ F
    witness = next((w for w in range(source.dim) if counit[0, w] != source.epsilon[w]), None)
    report.expect("eps' f = eps", witness is None, witness)

    report.inform("(f (x) f) Delta(1) = Delta'(1')", F.kron(F).apply_sparse(source.delta_one()) == target.delta_one())
    canonical = canonical_subalgebras(source)
    canonical_target = canonical_subalgebras(target)
    for label, space, space_target in (("L", canonical.L, canonical_target.L), ("R", canonical.R, canonical_target.R)):
        restricted = image(F @ space.basis_matrix())
        report.inform(f"f maps {label} onto {label}'", restricted == space_target and restricted.dim == space.dim)
    logger.info(f"Strict morphism check {f.label}: {'pass' if report.passed else 'FAIL'}")
    return report


def _weak_coproduct(
    f: AlgebraMap, source: WeakBialgebra, target: WeakBialgebra, left: bool
) -> CheckReport:
    algebra = target.algebra
    F = f.matrix
    pushed = (F.kron(F) @ source.delta).sparse_columns()
    pulled = (target.delta @ F).sparse_columns()
    unit = target.delta_one()
    failing = []
    for w in range(source.dim):
        if left:
            lhs = algebra.multiply_tensors(unit, pushed[w])
        else:
            lhs = algebra.multiply_tensors(pushed[w], unit)
        if lhs != pulled[w]:
            failing.append(w)
    name = "Delta'(1')(f (x) f)Delta(w) = Delta'(f(w))" if left else "(f (x) f)Delta(w) Delta'(1') = Delta'(f(w))"
    report = CheckReport(subject=name)
    report.expect(name, not failing, failing[0] if failing else None, violations=len(failing))
    return report


def _weak_morphism(
    f: AlgebraMap,
    source: WeakBialgebra,
    target: WeakBialgebra,
    left: bool,
    canonical: Optional[CanonicalSubalgebras],
    canonical_target: Optional[CanonicalSubalgebras],
) -> MorphismReport:
    _require_fit(f, source, target)
    kind = "weak-left" if left else "weak-right"
    report = _new_report(kind, f, source, target)
    report.extend(check_algebra_map(f), prefix="algebra map")
    canonical = canonical or canonical_subalgebras(source)
    canonical_target = canonical_target or canonical_subalgebras(target)
    F = f.matrix
    if left:
        report.expect("f(R) in R'", image(F @ canonical.R.basis_matrix()).is_subspace_of(canonical_target.R))
        lhs = canonical_target.piL @ F
        rhs = F @ canonical.piL
        report.expect("Pi'^L f = f Pi^L", lhs == rhs, _first_column_difference(lhs, rhs))
    else:
        report.expect("f(L) in L'", image(F @ canonical.L.basis_matrix()).is_subspace_of(canonical_target.L))
        lhs = canonical_target.piR @ F
        rhs = F @ canonical.piR
        report.expect("Pi'^R f = f Pi^R", lhs == rhs, _first_column_difference(lhs, rhs))
    report.extend(_weak_coproduct(f, source, target, left))
    logger.info(f"{kind} morphism check {f.label}: {'pass' if report.passed else 'FAIL'}")
    return report


def check_weak_left_morphism(
    f: AlgebraMap,
    source: WeakBialgebra,
    target: WeakBialgebra,
    canonical: Optional[CanonicalSubalgebras] = None,
    canonical_target: Optional[CanonicalSubalgebras] = None,
) -> MorphismReport:
    """
    Algebra map with f(R) in R', Pi'^L f = f Pi^L and Delta'(1')(f (x) f)Delta(w) = Delta'(f(w)).

    These are exactly the conditions for f to be a map of the underlying left bialgebroids.
    """
    return _weak_morphism(f, source, target, True, canonical, canonical_target)


def check_weak_right_morphism(
    f: AlgebraMap,
    source: WeakBialgebra,
    target: WeakBialgebra,
    canonical: Optional[CanonicalSubalgebras] = None,
    canonical_target: Optional[CanonicalSubalgebras] = None,
) -> MorphismReport:
    """Mirror of the weak left conditions: f(L) in L', Pi'^R f = f Pi^R, (f (x) f)Delta(w) Delta'(1') = Delta'(f(w))."""
    return _weak_morphism(f, source, target, False, canonical, canonical_target)


def check_bialgebroid_map(
    phi: AlgebraMap, source: LeftBialgebroid, target: LeftBialgebroid, omega: Optional[Matrix] = None
) -> MorphismReport:
    """
    A map of left bialgebroids over the base map omega = pi' phi s.

    Args:
        phi: algebra map between the total algebras
        source: bialgebroid over R
        target: bialgebroid over R'
        omega: override of the base map, for probing broken squares
    """
    if phi.matrix.shape != (target.dim, source.dim):
        raise DimensionMismatch(f"Map of shape {phi.matrix.shape} between {source.name} and {target.name}")
    report = MorphismReport(subject=f"bialgebroid map {source.name} -> {target.name}", kind="bialgebroid")
    report.extend(check_algebra_map(phi), prefix="algebra map")
    P = phi.matrix
    if omega is None:
        omega = target.counit @ P @ source.source.matrix
    report.record("omega", omega)
    report.expect("phi s = s' omega", P @ source.source.matrix == target.source.matrix @ omega)
    report.expect("phi t = t' omega", P @ source.target.matrix == target.target.matrix @ omega)
    report.expect("pi' phi = omega pi", target.counit @ P == omega @ source.counit)

    square = target.tensor_square
    pushed = P.kron(P) @ source.gamma_representative
    pulled = target.gamma_representative @ P
    pushed_columns = pushed.sparse_columns()
    pulled_columns = pulled.sparse_columns()
    failing = [a for a in range(source.dim) if not square.same_class(pushed_columns[a], pulled_columns[a])]
    report.expect(
        "gamma' phi = (phi (x) phi) gamma", not failing, failing[0] if failing else None, violations=len(failing)
    )
    logger.info(f"Bialgebroid map check {phi.label}: {'pass' if report.passed else 'FAIL'}")
    return report


def deformation_identities(f: AlgebraMap, source: WeakBialgebra, target: WeakBialgebra) -> CheckReport:
    """
    For a weak left morphism whose restriction to L is invertible: with u = eps'(f(1_1)) 1_2,
    Delta'(f(w)) = (f (x) f)((1 (x) u^-1) Delta(w)) and eps'(f(w)) = eps(u w).
    """
    algebra = source.algebra
    n = source.dim
    report = CheckReport(subject=f"deformation identities of {f.label}")
    u: SparseVector = {}
    for flat, c in source.delta_one().items():
        a, b = divmod(flat, n)
        value = target.counit(f.apply_sparse({a: 1}))
        if value:
            accumulate(u, b, c * value)
    u_element = algebra.element([u.get(i, 0) for i in range(n)])
    report.record("u", u_element.coords)
    try:
        u_inverse = invert(algebra, u_element)
    except NotInvertible:
        report.expect("u invertible", False, u_element.coords)
        return report
    F = f.matrix
    twisted = Matrix.identity(n).kron(algebra.left_matrix(u_inverse.sparse())) @ source.delta
    lhs = target.delta @ F
    rhs = F.kron(F) @ twisted
    report.expect("Delta'(f(w)) = (f (x) f)((1 (x) u^-1) Delta(w))", lhs == rhs, _first_column_difference(lhs, rhs))
    counit = Matrix.row_vector(list(target.epsilon)) @ F
    scaled = algebra.left_matrix(u).transpose().apply(source.epsilon)
    witness = next((w for w in range(n) if counit[0, w] != scaled[w]), None)
    report.expect("eps'(f(w)) = eps(u w)", witness is None, witness)
    return report


CHECKERS: Dict[str, Callable[..., MorphismReport]] = {
    "strict": check_strict_morphism,
    "weak-left": check_weak_left_morphism,
    "weak-right": check_weak_right_morphism,
}


def check_morphism(kind: str, f: AlgebraMap, source, target) -> MorphismReport:
    """Dispatch on the morphism kind named in a morphism document."""
    if kind == "bialgebroid":
        return check_bialgebroid_map(f, source, target)
    try:
        checker = CHECKERS[kind]
    except KeyError:
        raise ValueError(f"Unknown morphism kind {kind!r}; expected one of {', '.join(KINDS)}") from None
    return checker(f, source, target)
