"""Blowing up a bialgebra H to the weak Hopf algebra H (x) M_n."""

import logging

from ..algebra.constructors import matrix_algebra, tensor_algebra
from ..algebra.maps import AlgebraMap
from ..linalg.matrix import Matrix
from ..wba.coalgebra import Coalgebra
from ..wba.weak_bialgebra import WeakBialgebra, WeakHopfAlgebra

logger = logging.getLogger(__name__)


def blow_up(hopf: WeakBialgebra, n: int) -> WeakBialgebra:
    """
    W = H (x) M_n with Delta(h (x) e_ij) = (h1 (x) e_ij) (x) (h2 (x) e_ij),
    eps(h (x) e_ij) = eps_H(h) and S(h (x) e_ij) = S_H(h) (x) e_ji when H has an antipode.

    The basis vector h_k (x) e_ij has index k * n^2 + i * n + j.
    """
    if n < 1:
        raise ValueError(f"Blow-up size must be positive, got {n}")
    algebra = tensor_algebra(hopf.algebra, matrix_algebra(n))
    h = hopf.dim
    block = n * n
    dim = h * block
    data = {}
    for k in range(h):
        for (a, b), c in hopf.coalgebra.pairs_of(k).items():
            for unit in range(block):
                column = k * block + unit
                row = (a * block + unit) * dim + b * block + unit
                data.setdefault(row, {})[column] = c
    delta = Matrix(dim * dim, dim, data)
    epsilon = [hopf.epsilon[k] for k in range(h) for _ in range(block)]
    name = f"{hopf.name} (x) M_{n}"
    coalgebra = Coalgebra(delta, epsilon)
    if isinstance(hopf, WeakHopfAlgebra):
        antipode_data = {}
        for k in range(h):
            for target, c in hopf.antipode.sparse_column(k).items():
                for i in range(n):
                    for j in range(n):
                        antipode_data.setdefault(target * block + j * n + i, {})[k * block + i * n + j] = c
        result: WeakBialgebra = WeakHopfAlgebra(algebra, coalgebra, Matrix(dim, dim, antipode_data), name=name)
    else:
        result = WeakBialgebra(algebra, coalgebra, name=name)
    logger.debug(f"Blew up {hopf.name} to dimension {dim}")
    return result


def diagonal_embedding(hopf: WeakBialgebra, blown_up: WeakBialgebra, n: int) -> AlgebraMap:
    """h -> h (x) I_n."""
    block = n * n
    data = {}
    for k in range(hopf.dim):
        for i in range(n):
            data.setdefault(k * block + i * n + i, {})[k] = 1
    return AlgebraMap(hopf.algebra, blown_up.algebra, Matrix(blown_up.dim, hopf.dim, data), name=f"{hopf.name} -> {blown_up.name}")
