"""W-Galois extensions: the canonical map E (x)_L W -> End(E) and the smash product E # W."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.constructors import matrix_algebra
from ..algebra.maps import AlgebraMap, check_algebra_map
from ..algebra.operations import invert
from ..algebra.structure import FinDimAlgebra
from ..linalg.matrix import Matrix
from ..linalg.quotient import QuotientSpace
from ..linalg.subspace import Subspace, rank
from ..linalg.tensor import flip_matrix
from ..linalg.vectors import SparseVector, accumulate
from ..morphisms.actions import ModuleAlgebraAction, check_module_algebra_action, invariants
from ..morphisms.checkers import check_weak_left_morphism, check_weak_right_morphism
from ..morphisms.universal import action_map, radon_nikodym
from ..report import CheckReport
from ..wba.weak_bialgebra import WeakHopfAlgebra, canonical_subalgebras
from .number_field import NumberField
from .universal import flatten_operator, universal_wha

logger = logging.getLogger(__name__)


def balanced_relations(action: ModuleAlgebraAction) -> Subspace:
    """Span of x.l (x) w - x (x) l w in E (x) W, with x.l = x (l > 1) for l in W^L."""
    wba = action.wba
    module = action.module
    d = wba.dim
    L = canonical_subalgebras(wba).L
    unit = module.unit_sparse()
    vectors: List[SparseVector] = []
    for k in range(L.dim):
        l = dict(L.basis.row_items(k))
        shift = action.act(l, unit)
        left_by_l = wba.algebra.left_matrix(l)
        for x in range(module.dim):
            moved = module.multiply_sparse({x: 1}, shift)
            for w in range(d):
                relation: SparseVector = {}
                for i, c in moved.items():
                    accumulate(relation, i * d + w, c)
                for v, c in left_by_l.sparse_column(w).items():
                    accumulate(relation, x * d + v, -c)
                if relation:
                    vectors.append(relation)
    return Subspace.span_sparse(vectors, module.dim * d)


def canonical_map_matrix(action: ModuleAlgebraAction) -> Matrix:
    """x (x) w -> (y -> x (w > y)) as an (n^2 x n dim W) matrix into End(E)."""
    module = action.module
    d = action.wba.dim
    n = module.dim
    columns: List[SparseVector] = []
    for x in range(n):
        left = module.left_matrix({x: 1})
        for w in range(d):
            columns.append(flatten_operator(left @ action.basis_operator(w)))
    return Matrix.from_sparse_columns(columns, n * n)


@dataclass
class SmashProduct:
    """E # W on E (x)_L W, the canonical map into End(E) and whether it is bijective."""

    algebra: FinDimAlgebra
    canonical_map: AlgebraMap
    quotient: QuotientSpace
    bijective: bool


def smash_product(action: ModuleAlgebraAction, relations: Optional[Subspace] = None) -> SmashProduct:
    """
    (x # w)(y # v) = x (w_1 > y) # w_2 v on the classes of E (x)_L W.

    Args:
        action: module-algebra action of W on a commutative algebra E
        relations: precomputed balanced relations

    Returns:
        SmashProduct with the structure constants on the pivot-free complement basis
    """
    wba = action.wba
    module = action.module
    n = module.dim
    d = wba.dim
    quotient = QuotientSpace(relations if relations is not None else balanced_relations(action))
    representatives = [divmod(j, d) for j in quotient.complement]
    images = [action.basis_operator(w).sparse_columns() for w in range(d)]

    table: Dict[Tuple[int, int], SparseVector] = {}
    for a, (x, w) in enumerate(representatives):
        pairs = wba.coalgebra.pairs_of(w)
        for b, (y, v) in enumerate(representatives):
            product: SparseVector = {}
            for (w1, w2), c in pairs.items():
                left = module.multiply_sparse({x: 1}, images[w1][y])
                if not left:
                    continue
                right = wba.algebra.product(w2, v)
                for i, e in left.items():
                    for j, f in right.items():
                        accumulate(product, i * d + j, c * e * f)
            projected = quotient.project_sparse(product)
            if projected:
                table[(a, b)] = projected
    one_one = {k * d + u: c * e for k, c in module.unit_sparse().items() for u, e in wba.algebra.unit_sparse().items()}
    one = quotient.project_sparse(one_one)
    unit = [one.get(k, 0) for k in range(quotient.dim)]
    names = [f"{module.label(x)}#{wba.algebra.label(w)}" for x, w in representatives]
    algebra = FinDimAlgebra(quotient.dim, table, unit, basis_names=names, name=f"{module.name} # {wba.name}")

    matrix = canonical_map_matrix(action) @ quotient.section_matrix()
    target = matrix_algebra(n)
    canonical = AlgebraMap(algebra, target, matrix, name="x # w -> x (w > .)")
    bijective = quotient.dim == n * n and rank(matrix) == n * n
    logger.info(f"Smash product {algebra.name}: dimension {quotient.dim}, canonical map {'bijective' if bijective else 'not bijective'}")
    return SmashProduct(algebra=algebra, canonical_map=canonical, quotient=quotient, bijective=bijective)


def w_galois_check(
    field: NumberField, action: ModuleAlgebraAction, universal: Optional[WeakHopfAlgebra] = None
) -> CheckReport:
    """
    Bijectivity of E (x)_L W -> End(E), and in the Galois case the consequences: smash
    product isomorphism, W^L = W^R with S = id on it, cocommutativity, E^W = Q, the
    Radon-Nikodym identity and the weak morphism properties of phi: W -> End(E).
    """
    wba = action.wba
    n = field.degree
    report = CheckReport(subject=f"{wba.name}-Galois check of {field.name}")
    module_report = check_module_algebra_action(action)
    if not report.extend(module_report, prefix="action"):
        report.expect("module-algebra action", False, detail="canonical map not built")
        return report

    relations = balanced_relations(action)
    smash = smash_product(action, relations)
    phi_rank = rank(smash.canonical_map.matrix)
    report.record("dim E (x)_L W", smash.quotient.dim)
    report.record("rank", phi_rank)
    canonical_vanishes = (canonical_map_matrix(action) @ relations.basis_matrix()).is_zero()
    report.expect("canonical map vanishes on the balanced relations", canonical_vanishes)
    if not report.expect("canonical map bijective", smash.bijective, witness=[smash.quotient.dim, phi_rank, n * n]):
        return report

    universal = universal or universal_wha(field)
    canonical = canonical_subalgebras(wba)
    report.extend(check_algebra_map(smash.canonical_map), prefix="smash product isomorphism")

    report.expect("W^L = W^R", canonical.L == canonical.R)
    if isinstance(wba, WeakHopfAlgebra):
        fixed = [k for k in range(canonical.L.dim) if wba.antipode.apply(canonical.L.basis.row(k)) != canonical.L.basis.row(k)]
        report.expect("S = id on W^L", not fixed, fixed[0] if fixed else None)

    flipped = flip_matrix(wba.dim, wba.dim) @ wba.delta
    report.expect("cocommutative", flipped == wba.delta)

    fixed_field = invariants(action, canonical)
    report.expect("E^W = Q", fixed_field == Subspace.span([field.algebra.unit], n), witness=fixed_field.dim)

    unit = field.algebra.unit_sparse()
    intermediate = Subspace.span_sparse([action.act(dict(canonical.L.basis.row_items(k)), unit) for k in range(canonical.L.dim)], n)
    report.record("phi(L) > 1", intermediate.basis.to_strings())

    phi = action_map(action, universal)
    u = radon_nikodym(action, phi, universal)
    if u is None:
        report.expect("eps_W(w) = eps_A(phi(u^-1 w))", False, detail="no invertible u in W^L")
    else:
        report.record("radon-nikodym u", u.coords)
        u_inverse = invert(wba.algebra, u)
        witness = None
        for w in range(wba.dim):
            moved = wba.algebra.multiply_sparse(u_inverse.sparse(), {w: 1})
            if universal.counit(phi.apply_sparse(moved)) != wba.epsilon[w]:
                witness = w
                break
        report.expect("eps_W(w) = eps_A(phi(u^-1 w))", witness is None, witness)

    left = check_weak_left_morphism(phi, wba, universal)
    right = check_weak_right_morphism(phi, wba, universal)
    report.inform("phi weak left morphism", left.passed, detail=", ".join(c.name for c in left.failures()) or None)
    report.inform("phi weak right morphism", right.passed, detail=", ".join(c.name for c in right.failures()) or None)
    size = n * n
    image_unit = {}
    for flat, c in wba.delta_one().items():
        a, b = divmod(flat, wba.dim)
        for p, e in phi.matrix.sparse_column(a).items():
            for q, f in phi.matrix.sparse_column(b).items():
                accumulate(image_unit, p * size + q, c * e * f)
    target_unit = universal.delta_one()
    algebra = universal.algebra
    report.inform(
        "Delta_A(1) below (phi (x) phi) Delta_W(1)",
        algebra.multiply_tensors(image_unit, target_unit) == target_unit
        and algebra.multiply_tensors(target_unit, image_unit) == target_unit,
    )
    logger.info(f"{report.subject}: {'pass' if report.passed else 'FAIL'}")
    return report

