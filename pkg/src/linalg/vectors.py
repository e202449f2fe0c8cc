"""Dense and sparse rational vectors."""

from typing import Dict, Mapping, Sequence, Tuple

from .rational import ZERO, Scalar

Vector = Tuple[Scalar, ...]
SparseVector = Dict[int, Scalar]


def sparse(u: Sequence[Scalar]) -> SparseVector:
    return {i: a for i, a in enumerate(u) if a != 0}


def dense(u: Mapping[int, Scalar], n: int) -> Vector:
    values = [ZERO] * n
    for i, a in u.items():
        values[i] = a
    return tuple(values)


def accumulate(target: Dict, key, value: Scalar) -> None:
    """Add value into target[key], dropping the key when the sum cancels."""
    total = target.get(key, ZERO) + value
    if total == 0:
        target.pop(key, None)
    else:
        target[key] = total
