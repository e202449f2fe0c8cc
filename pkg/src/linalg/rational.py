"""Exact rational scalars shared by every module."""

import logging
import re
from fractions import Fraction
from typing import Any, Union

from sympy import Rational as SympyRational
from sympy.polys.domains import QQ

logger = logging.getLogger(__name__)

Scalar = Any  # QQ.dtype: gmpy2.mpq when available, PythonMPQ otherwise
RationalLike = Union[int, str, Fraction, SympyRational, Scalar]

ZERO = QQ.zero
ONE = QQ.one

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Scalar:
    """
    Parse a rational from its string form.

    Args:
        text: "p/q" or "p", optional sign, no decimals

    Returns:
        Reduced rational with positive denominator
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ValueError(f"Not a rational number: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return QQ(numerator, denominator)


def to_rational(value: RationalLike) -> Scalar:
    """Convert ints, strings, fractions and sympy rationals to a QQ element."""
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError(f"Refusing inexact float {value!r}")
    return QQ.convert(value)


def format_rational(value: RationalLike) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    value = to_rational(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"
