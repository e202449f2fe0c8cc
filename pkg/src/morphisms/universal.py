"""The canonical weak left morphism into the universal weak Hopf algebra End(M)."""

import logging
from typing import List, Optional, Tuple

from ..algebra.maps import AlgebraMap
from ..algebra.operations import invert
from ..algebra.structure import Element
from ..errors import FactorizationError, NotInvertible
from ..linalg.matrix import Matrix
from ..linalg.subspace import solve
from ..report import MorphismReport
from ..wba.weak_bialgebra import WeakBialgebra, canonical_subalgebras
from .actions import ModuleAlgebraAction, check_module_algebra_action
from .checkers import check_weak_left_morphism

logger = logging.getLogger(__name__)


def action_map(action: ModuleAlgebraAction, universal: WeakBialgebra) -> AlgebraMap:
    """w -> (m -> w > m) flattened into End(M), operator entry (a, b) at index a * dim M + b."""
    m = action.module.dim
    if universal.dim != m * m:
        raise FactorizationError(f"{universal.name} of dimension {universal.dim} is not End of a {m}-dimensional algebra")
    columns = []
    for w in range(action.wba.dim):
        operator = action.basis_operator(w)
        columns.append({i * m + j: c for i, j, c in operator.nonzero()})
    return AlgebraMap(action.wba.algebra, universal.algebra, Matrix.from_sparse_columns(columns, m * m), name="phi")


def natural_action(universal: WeakBialgebra, module) -> ModuleAlgebraAction:
    """End(M) acting on M by evaluation."""
    m = module.dim
    operators = []
    for index in range(universal.dim):
        a, b = divmod(index, m)
        operators.append(Matrix(m, m, {a: {b: 1}}))
    return ModuleAlgebraAction.from_operators(universal, module, operators)


def universal_morphism(action: ModuleAlgebraAction, universal: WeakBialgebra) -> Tuple[AlgebraMap, MorphismReport]:
    """
    The unique weak left morphism phi: W -> End(M) with alpha_A (phi (x) id) = alpha_W.

    Raises:
        FactorizationError: the action is not a module-algebra action or does not factor
    """
    module_report = check_module_algebra_action(action)
    if not module_report.passed:
        failed = ", ".join(c.name for c in module_report.failures())
        raise FactorizationError(f"Action of {action.wba.name} on {action.module.name} fails: {failed}")
    phi = action_map(action, universal)
    report = check_weak_left_morphism(phi, action.wba, universal)
    mismatches = _factorization_mismatches(action, phi, natural_action(universal, action.module))
    factors = report.expect(
        "alpha_A (phi (x) id) = alpha_W",
        not mismatches,
        mismatches[0] if mismatches else None,
        detail="phi(w) > m = w > m on basis pairs [w, m]",
        violations=len(mismatches),
    )
    if not factors:
        raise FactorizationError(
            f"Action of {action.wba.name} does not factor through {universal.name} at {len(mismatches)} basis pairs"
        )
    u = radon_nikodym(action, phi, universal)
    if u is not None:
        report.record("radon-nikodym u", u.coords)
        report.inform("eps_W(w) = eps_A(phi(u^-1 w))", _radon_nikodym_holds(action.wba, universal, phi, u))
    else:
        report.inform("radon-nikodym element exists", False)
    logger.info(f"Universal morphism of {action.wba.name}: weak left {'pass' if report.passed else 'FAIL'}")
    return phi, report


def _factorization_mismatches(action: ModuleAlgebraAction, phi: AlgebraMap, natural: ModuleAlgebraAction) -> List[List[int]]:
    mismatches = []
    for w in range(action.wba.dim):
        through = natural.operator(phi.apply_sparse({w: 1}))
        direct = action.basis_operator(w)
        for m in range(action.module.dim):
            if through.sparse_column(m) != direct.sparse_column(m):
                mismatches.append([w, m])
    return mismatches


def radon_nikodym(action: ModuleAlgebraAction, phi: AlgebraMap, universal: WeakBialgebra) -> Optional[Element]:
    """
    u in W^L with eps_A(phi(l)) = eps_W(u l) for l in W^L, or None when no invertible solution exists.
    """
    wba = action.wba
    algebra = wba.algebra
    L = canonical_subalgebras(wba).L
    basis = [dict(L.basis.row_items(k)) for k in range(L.dim)]
    # unknown u = sum_j c_j b_j; row k: eps_W(b_j b_k)
    rows = [[wba.counit(algebra.multiply_sparse(bj, bk)) for bj in basis] for bk in basis]
    rhs = [universal.counit(phi.apply_sparse(bk)) for bk in basis]
    solution = solve(Matrix.from_rows(rows, cols=len(basis)), rhs)
    if solution is None:
        return None
    coords = Matrix.from_rows([list(L.basis.row(k)) for k in range(L.dim)], cols=wba.dim).transpose().apply(solution)
    u = algebra.element(coords)
    try:
        invert(algebra, u)
    except NotInvertible:
        logger.debug(f"Radon-Nikodym candidate for {wba.name} is not invertible")
        return None
    return u


def _radon_nikodym_holds(wba: WeakBialgebra, universal: WeakBialgebra, phi: AlgebraMap, u: Element) -> bool:
    algebra = wba.algebra
    u_inverse = invert(algebra, u)
    for w in range(wba.dim):
        moved = algebra.multiply_sparse(u_inverse.sparse(), {w: 1})
        if universal.counit(phi.apply_sparse(moved)) != wba.epsilon[w]:
            return False
    return True
