"""Ordinary Hopf algebras used as inputs: group algebras of cyclic groups."""

from ..algebra.constructors import group_algebra_cyclic
from ..linalg.matrix import Matrix
from .coalgebra import Coalgebra
from .weak_bialgebra import WeakHopfAlgebra


def cyclic_group_hopf(n: int) -> WeakHopfAlgebra:
    """Q[Z/n] with Delta(g^k) = g^k (x) g^k, eps(g^k) = 1, S(g^k) = g^-k."""
    algebra = group_algebra_cyclic(n)
    delta = Matrix(n * n, n, {k * n + k: {k: 1} for k in range(n)})
    antipode = Matrix(n, n, {(-k) % n: {k: 1} for k in range(n)})
    return WeakHopfAlgebra(algebra, Coalgebra(delta, [1] * n), antipode, name=f"Q[Z/{n}]")
