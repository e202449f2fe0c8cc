"""Standard structure-constant tables."""

import logging
import re
from typing import Dict, Sequence, Tuple

from sympy import Integer, Poly, Symbol
from sympy.parsing.sympy_parser import auto_number, parse_expr
from sympy.polys.domains import QQ

from ..errors import InvalidPolynomial
from ..linalg.rational import ONE, RationalLike, to_rational
from ..linalg.vectors import SparseVector
from .structure import FinDimAlgebra

logger = logging.getLogger(__name__)

X = Symbol("x")

# integers, x, arithmetic and parentheses; nothing else reaches parse_expr
POLYNOMIAL_TEXT = re.compile(r"[0-9x+\-*/^()\s]+")


def parse_polynomial_text(text: str):
    """Read a polynomial in x written with integers, + - * / ^ and parentheses."""
    if not POLYNOMIAL_TEXT.fullmatch(text):
        raise InvalidPolynomial(f"Cannot read polynomial {text!r}: only integers, x, + - * / ^ and parentheses are allowed")
    return parse_expr(
        text.replace("^", "**"),
        local_dict={"x": X},
        global_dict={"Integer": Integer},
        transformations=(auto_number,),
    )


def as_polynomial(p) -> Poly:
    """Accept a sympy Poly, an expression or string in x, or coefficients low-to-high."""
    if isinstance(p, Poly):
        poly = Poly(p.as_expr(), X, domain=QQ)
    elif isinstance(p, (list, tuple)):
        if not p:
            raise InvalidPolynomial("Empty coefficient list")
        coeffs = [to_rational(c) for c in p]
        poly = Poly.from_list([QQ.to_sympy(c) for c in reversed(coeffs)], X, domain=QQ)
    else:
        try:
            expr = parse_polynomial_text(p) if isinstance(p, str) else p
            poly = Poly(expr, X, domain=QQ)
        except InvalidPolynomial:
            raise
        except Exception as e:
            raise InvalidPolynomial(f"Cannot read polynomial {p!r}: {e}") from e
    if poly.degree() < 1:
        raise InvalidPolynomial(f"Polynomial {poly.as_expr()} has degree < 1")
    return poly


def poly_quotient(p) -> FinDimAlgebra:
    """
    Q[x]/(p) with basis 1, x, ..., x^(n-1).

    Args:
        p: monic polynomial with integer coefficients (see ``as_polynomial``)

    Returns:
        Commutative algebra of dimension deg p
    """
    poly = as_polynomial(p)
    if poly.LC() != 1:
        raise InvalidPolynomial(f"Polynomial {poly.as_expr()} is not monic")
    if any(not QQ.convert(c).denominator == 1 for c in poly.all_coeffs()):
        raise InvalidPolynomial(f"Polynomial {poly.as_expr()} has non-integer coefficients")
    n = poly.degree()
    powers: Dict[int, SparseVector] = {}
    for k in range(2 * n - 1):
        remainder = Poly(X**k, X, domain=QQ).rem(poly)
        coeffs = list(reversed(remainder.all_coeffs()))
        powers[k] = {i: QQ.convert(c) for i, c in enumerate(coeffs) if c != 0}
    table = {(i, j): powers[i + j] for i in range(n) for j in range(n)}
    names = ["1", "x"] + [f"x^{k}" for k in range(2, n)]
    unit = [ONE] + [0] * (n - 1)
    logger.debug(f"Built Q[x]/({poly.as_expr()}) of dimension {n}")
    return FinDimAlgebra(n, table, unit, basis_names=names[:n], name=f"Q[x]/({poly.as_expr()})")


def matrix_algebra(n: int) -> FinDimAlgebra:
    """M_n(Q) with matrix units e_ab at index a * n + b."""
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    table = {}
    for a in range(n):
        for b in range(n):
            for d in range(n):
                table[(a * n + b, b * n + d)] = {a * n + d: ONE}
    unit = [ONE if a == b else 0 for a in range(n) for b in range(n)]
    names = [f"e{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    return FinDimAlgebra(n * n, table, unit, basis_names=names, name=f"M_{n}(Q)")


def diagonal_algebra(n: int) -> FinDimAlgebra:
    """Q^n with orthogonal idempotents."""
    if n < 1:
        raise ValueError(f"Dimension must be positive, got {n}")
    return FinDimAlgebra(n, {(i, i): {i: ONE} for i in range(n)}, [ONE] * n, basis_names=[f"p{i + 1}" for i in range(n)], name=f"Q^{n}")


def group_algebra_cyclic(n: int) -> FinDimAlgebra:
    """Q[Z/n] with basis 1, g, ..., g^(n-1)."""
    if n < 1:
        raise ValueError(f"Group order must be positive, got {n}")
    table = {(i, j): {(i + j) % n: ONE} for i in range(n) for j in range(n)}
    names = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return FinDimAlgebra(n, table, [ONE] + [0] * (n - 1), basis_names=names[:n], name=f"Q[Z/{n}]")


def tensor_algebra(a: FinDimAlgebra, b: FinDimAlgebra) -> FinDimAlgebra:
    """A (x) B, multiplied legwise; a_i (x) b_k has index i * dim B + k."""
    m = b.dim
    table: Dict[Tuple[int, int], SparseVector] = {}
    for (i, j), first in a.table.items():
        for (k, l), second in b.table.items():
            product: SparseVector = {}
            for r, c in first.items():
                for s, d in second.items():
                    product[r * m + s] = c * d
            table[(i * m + k, j * m + l)] = product
    unit = [x * y for x in a.unit for y in b.unit]
    names = None
    if a.basis_names and b.basis_names:
        names = [f"{x}(x){y}" for x in a.basis_names for y in b.basis_names]
    return FinDimAlgebra(a.dim * m, table, unit, basis_names=names, name=f"{a.name} (x) {b.name}")


def opposite(a: FinDimAlgebra) -> FinDimAlgebra:
    """Same space with m^op = m . flip."""
    table = {(j, i): product for (i, j), product in a.table.items()}
    name = a.name[:-3] if a.name.endswith("^op") else f"{a.name}^op"
    return FinDimAlgebra(a.dim, table, a.unit, basis_names=a.basis_names, name=name)


def algebra_from_array(mult: Sequence[Sequence[Sequence[RationalLike]]], unit: Sequence[RationalLike], basis_names=None) -> FinDimAlgebra:
    """Build from the dense rank-3 table mult[i][j][k]."""
    n = len(mult)
    table = {}
    for i, row in enumerate(mult):
        if len(row) != n:
            raise ValueError(f"Row {i} of the product table has {len(row)} entries, expected {n}")
        for j, product in enumerate(row):
            if len(product) != n:
                raise ValueError(f"Product e{i}.e{j} has {len(product)} coefficients, expected {n}")
            table[(i, j)] = {k: c for k, c in enumerate(product)}
    return FinDimAlgebra(n, table, unit, basis_names=basis_names)
