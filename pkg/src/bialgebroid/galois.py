"""The Galois bialgebroid End_{N-N}(M) of a finite-dimensional algebra extension N in M."""

import logging
from typing import List

from ..algebra.constructors import matrix_algebra
from ..algebra.maps import AlgebraMap
from ..algebra.operations import commutant, is_subalgebra, subalgebra
from ..algebra.structure import FinDimAlgebra
from ..errors import NotInSubalgebra, NotLiftable
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace, kernel, rank, solve_many
from ..linalg.vectors import SparseVector, accumulate
from .bialgebroid import LeftBialgebroid
from .tensor_square import BaseTensorSquare

logger = logging.getLogger(__name__)


def operator_coordinates(matrix: Matrix) -> SparseVector:
    """Flatten an m x m operator to End(M) coordinates, e_ab at a*m + b."""
    m = matrix.rows
    return {i * m + j: c for i, j, c in matrix.nonzero()}


def coordinates_operator(coords: SparseVector, m: int) -> Matrix:
    return Matrix(m, m, _rows_of(coords, m))


def _rows_of(coords: SparseVector, m: int):
    rows = {}
    for flat, c in coords.items():
        i, j = divmod(flat, m)
        rows.setdefault(i, {})[j] = c
    return rows


def _hom_constraints(algebra: FinDimAlgebra, sub: Subspace) -> Matrix:
    """
    Linear conditions on f: M (x) M -> M, flat k*m^2 + i*m + j, cutting out the
    N-N bimodule maps that are N-balanced.
    """
    m = algebra.dim
    rows: List[SparseVector] = []
    for idx in range(sub.dim):
        n_vec = dict(sub.basis.row_items(idx))
        left = algebra.left_matrix(n_vec).sparse_columns()
        right = algebra.right_matrix(n_vec).sparse_columns()
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    # f(e_i n (x) e_j) - f(e_i (x) n e_j), coordinate k
                    balanced: SparseVector = {}
                    for p, c in right[i].items():
                        accumulate(balanced, k * m * m + p * m + j, c)
                    for p, c in left[j].items():
                        accumulate(balanced, k * m * m + i * m + p, -c)
                    if balanced:
                        rows.append(balanced)
                    # f(n e_i (x) e_j) - n f(e_i (x) e_j), coordinate k
                    left_linear: SparseVector = {}
                    for p, c in left[i].items():
                        accumulate(left_linear, k * m * m + p * m + j, c)
                    for q in range(m):
                        c = left[q].get(k)
                        if c:
                            accumulate(left_linear, q * m * m + i * m + j, -c)
                    if left_linear:
                        rows.append(left_linear)
                    right_linear: SparseVector = {}
                    for p, c in right[j].items():
                        accumulate(right_linear, k * m * m + i * m + p, c)
                    for q in range(m):
                        c = right[q].get(k)
                        if c:
                            accumulate(right_linear, q * m * m + i * m + j, -c)
                    if right_linear:
                        rows.append(right_linear)
    return Matrix(len(rows), m ** 3, dict(enumerate(rows)))


def galois_bialgebroid(algebra: FinDimAlgebra, sub: Subspace) -> LeftBialgebroid:
    """
    End_{N-N}(M) over the centralizer R = C_M(N) with s(r) = lambda_r, t(r) = rho_r,
    pi(a) = a(1_M) and gamma read back through the canonical map
    (a (x) a')(m (x) m') = a(m) a'(m').

    Args:
        algebra: the larger algebra M
        sub: the subalgebra N as a subspace of M

    Raises:
        NotInSubalgebra: sub is not a unital subalgebra
        NotLiftable: the canonical map onto Hom_{N-N}(M (x)_N M, M) is not bijective
    """
    if not is_subalgebra(algebra, sub):
        raise NotInSubalgebra(f"Subspace of dimension {sub.dim} is not a unital subalgebra of {algebra.name}")
    m = algebra.dim
    endomorphisms = matrix_algebra(m)
    generators = []
    for idx in range(sub.dim):
        n_vec = dict(sub.basis.row_items(idx))
        generators.append(operator_coordinates(algebra.left_matrix(n_vec)))
        generators.append(operator_coordinates(algebra.right_matrix(n_vec)))
    bimodule_maps = commutant(endomorphisms, Subspace.span_sparse(generators, m * m))
    total, total_inclusion = subalgebra(endomorphisms, bimodule_maps, name=f"End_N-N({algebra.name})")

    centralizer = commutant(algebra, sub)
    base, base_inclusion = subalgebra(algebra, centralizer, name=f"C({algebra.name})")
    base_vectors = [base_inclusion.matrix.sparse_column(r) for r in range(base.dim)]
    to_total = bimodule_maps.coordinate_matrix()
    source_columns = [to_total.apply_sparse(operator_coordinates(algebra.left_matrix(r))) for r in base_vectors]
    target_columns = [to_total.apply_sparse(operator_coordinates(algebra.right_matrix(r))) for r in base_vectors]
    source = AlgebraMap(base, total, Matrix.from_sparse_columns(source_columns, total.dim), name="lambda")
    target = AlgebraMap(base, total, Matrix.from_sparse_columns(target_columns, total.dim), name="rho")

    operators = [coordinates_operator(total_inclusion.matrix.sparse_column(a), m) for a in range(total.dim)]
    unit = algebra.unit_sparse()
    counit_columns = [base_inclusion_coordinates(centralizer, op.apply_sparse(unit)) for op in operators]
    counit = Matrix.from_sparse_columns(counit_columns, base.dim)

    # canonical map on the complement of the relations in A (x) A
    square = BaseTensorSquare(total, source.matrix, target.matrix)
    images = [op.sparse_columns() for op in operators]
    canonical_columns = []
    for k in range(square.dim):
        rep = square.section({k: 1})
        column: SparseVector = {}
        for flat, c in rep.items():
            a, b = divmod(flat, total.dim)
            for i in range(m):
                for j in range(m):
                    for p, d in algebra.multiply_sparse(images[a][i], images[b][j]).items():
                        accumulate(column, p * m * m + i * m + j, c * d)
        canonical_columns.append(column)
    canonical = Matrix.from_sparse_columns(canonical_columns, m ** 3)
    hom_dim = kernel(_hom_constraints(algebra, sub)).dim
    canonical_rank = rank(canonical)
    deficit = max(square.dim - canonical_rank, hom_dim - canonical_rank)
    if deficit:
        raise NotLiftable(
            f"Canonical map of {algebra.name} over a {sub.dim}-dimensional subalgebra has rank {canonical_rank}, "
            f"quotient dimension {square.dim}, target dimension {hom_dim}",
            deficit=deficit,
        )

    composites = []
    multiplication = algebra.mult_matrix()
    for op in operators:
        composite = op @ multiplication
        composites.append({k * m * m + flat: c for k, flat, c in composite.nonzero()})
    classes = solve_many(canonical, Matrix.from_sparse_columns(composites, m ** 3))
    if classes is None:
        raise NotLiftable(f"a . mu is outside the image of the canonical map for {algebra.name}", deficit=0)
    gamma_representative = square.section_matrix() @ classes
    result = LeftBialgebroid(source, target, gamma_representative, counit, name=f"Gal({algebra.name})", tensor_square=square)
    logger.info(f"Galois bialgebroid of {algebra.name}: dim {total.dim} over a base of dim {base.dim}")
    return result


def base_inclusion_coordinates(centralizer: Subspace, vector: SparseVector) -> SparseVector:
    coords = centralizer.coordinates_sparse(vector)
    return {k: c for k, c in enumerate(coords) if c != 0}
