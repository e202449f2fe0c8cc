"""Lifting a left bialgebroid with a separability structure on its base to a weak bialgebra."""

import logging
from typing import Tuple

from ..errors import DimensionMismatch
from ..linalg.matrix import Matrix
from ..report import CheckReport
from ..wba.coalgebra import Coalgebra
from ..wba.weak_bialgebra import WeakBialgebra, check_wba
from .bialgebroid import LeftBialgebroid, beta_l
from .separability import SeparabilityStructure, separability_from_functional

logger = logging.getLogger(__name__)


def sigma_matrix(bialgebroid: LeftBialgebroid, separability: SeparabilityStructure) -> Matrix:
    """sigma(b (x) b') = sum_i t(e_i) b (x) s(e^i) b' as a map on A (x) A."""
    algebra = bialgebroid.total
    n = algebra.dim
    result = Matrix.zeros(n * n, n * n)
    for e, dual in separability.pairs:
        left = algebra.left_matrix(bialgebroid.t(e))
        right = algebra.left_matrix(bialgebroid.s(dual))
        result = result + left.kron(right)
    return result


def _require_base(bialgebroid: LeftBialgebroid, separability: SeparabilityStructure) -> None:
    if separability.algebra != bialgebroid.base:
        raise DimensionMismatch(f"Separability structure on {separability.algebra.name} for base {bialgebroid.base.name}")


def lift_to_wba(bialgebroid: LeftBialgebroid, separability: SeparabilityStructure) -> WeakBialgebra:
    """
    Delta = sigma . gamma on class representatives and eps = psi . pi.

    Args:
        bialgebroid: left bialgebroid over R
        separability: functional of index one on R

    Returns:
        The weak bialgebra structure on the total algebra
    """
    _require_base(bialgebroid, separability)
    square = bialgebroid.tensor_square
    sigma = sigma_matrix(bialgebroid, separability)
    delta = sigma @ square.section_matrix() @ bialgebroid.gamma()
    psi = Matrix.row_vector(list(separability.psi))
    epsilon = (psi @ bialgebroid.counit).row(0)
    wba = WeakBialgebra(bialgebroid.total, Coalgebra(delta, epsilon), name=f"lift({bialgebroid.name})")
    logger.debug(f"Lifted {bialgebroid.name} with psi = {[str(v) for v in separability.psi]}")
    return wba


def check_lift(bialgebroid: LeftBialgebroid, separability: SeparabilityStructure) -> CheckReport:
    """sigma kills the relations, tau sigma = id, sigma tau = Delta(1) . and the lift is a weak bialgebra."""
    _require_base(bialgebroid, separability)
    algebra = bialgebroid.total
    n = algebra.dim
    square = bialgebroid.tensor_square
    sigma = sigma_matrix(bialgebroid, separability)
    tau = square.projection_matrix()
    report = CheckReport(subject=f"lift of {bialgebroid.name}")

    relations = square.relations.basis.transpose()
    report.expect("sigma vanishes on the relations", (sigma @ relations).is_zero())
    report.expect("tau sigma = id", (tau @ sigma @ square.section_matrix()).is_identity())

    wba = lift_to_wba(bialgebroid, separability)
    unit_delta = wba.delta_one()
    columns = [algebra.multiply_tensors(unit_delta, {k: 1}) for k in range(n * n)]
    left_unit = Matrix.from_sparse_columns(columns, n * n)
    report.expect("sigma tau = Delta(1) .", sigma @ square.section_matrix() @ tau == left_unit)
    report.extend(check_wba(wba), prefix="lift")
    return report


def counit_separability(wba: WeakBialgebra, bialgebroid: LeftBialgebroid) -> SeparabilityStructure:
    """The separability structure of eps restricted to the base of beta_l(W)."""
    inclusion = bialgebroid.source.matrix
    psi = Matrix.row_vector(list(wba.epsilon)) @ inclusion
    return separability_from_functional(bialgebroid.base, psi.row(0))


def round_trip(wba: WeakBialgebra) -> Tuple[WeakBialgebra, CheckReport]:
    """lift(beta_l(W), eps|_L) compared with W entrywise."""
    bialgebroid = beta_l(wba)
    lifted = lift_to_wba(bialgebroid, counit_separability(wba, bialgebroid))
    report = CheckReport(subject=f"round trip of {wba.name}")
    report.expect("Delta reproduced", lifted.delta == wba.delta)
    report.expect("eps reproduced", tuple(lifted.epsilon) == tuple(wba.epsilon))
    report.record("dim L", bialgebroid.base.dim)
    report.record("dim A (x)_L A", bialgebroid.tensor_square.dim)
    return lifted, report
