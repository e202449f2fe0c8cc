"""Structural properties of the universal weak Hopf algebra End(E)."""

import logging
from typing import Optional

from ..errors import InvalidPolynomial
from ..linalg.rational import to_rational
from ..linalg.subspace import Subspace
from ..linalg.tensor import flip_matrix
from ..morphisms.universal import natural_action
from ..report import CheckReport
from ..wba.grouplikes import grouplike_group
from ..wba.integrals import haar_check, left_integrals
from ..wba.weak_bialgebra import WeakHopfAlgebra, canonical_subalgebras
from .automorphisms import AutomorphismSettings, automorphism_operators, search_automorphisms
from .number_field import NumberField, TraceForm, trace_form
from .universal import multiplication_subspace, unflatten_operator, universal_wha
from .w_galois import smash_product

logger = logging.getLogger(__name__)


def verify_structural_properties(
    field: NumberField,
    universal: Optional[WeakHopfAlgebra] = None,
    form: Optional[TraceForm] = None,
    settings: Optional[AutomorphismSettings] = None,
) -> CheckReport:
    """
    Eight exact checks on A = End(E): L = R = lambda(E), S^2 = id, S is the transpose for
    the trace form, cocommutativity, the left integral space, the Haar integral tau/n,
    grouplikes versus automorphisms and the smash product isomorphism E # A = A.
    """
    form = form or trace_form(field)
    universal = universal or universal_wha(field, form)
    algebra = field.algebra
    n = field.degree
    size = n * n
    report = CheckReport(subject=f"structural properties of {universal.name}")
    canonical = canonical_subalgebras(universal)

    # 1
    lam = multiplication_subspace(field)
    report.expect("A^L = lambda(E)", canonical.L == lam, witness=canonical.L.dim)
    report.expect("A^R = lambda(E)", canonical.R == lam, witness=canonical.R.dim)

    # 2
    report.expect("S^2 = id", (universal.antipode @ universal.antipode).is_identity())

    # 3
    witness = None
    for a in range(size):
        operator = unflatten_operator({a: 1}, n)
        transposed = unflatten_operator(universal.antipode.sparse_column(a), n)
        for p in range(n):
            for q in range(n):
                lhs = form.apply(algebra.multiply_sparse({p: 1}, operator.sparse_column(q)))
                rhs = form.apply(algebra.multiply_sparse(transposed.sparse_column(p), {q: 1}))
                if lhs != rhs and witness is None:
                    witness = [a, p, q]
    report.expect("tau(x a(y)) = tau(S(a)(x) y)", witness is None, witness)

    # 4
    report.expect("cocommutative", flip_matrix(size, size) @ universal.delta == universal.delta)

    # 5
    unit = algebra.unit
    constant = Subspace.span_sparse(
        [{p * n + q: unit[p] for p in range(n) if unit[p]} for q in range(n)], size
    )
    integrals = left_integrals(universal, canonical)
    report.record("dim left integrals", integrals.dim)
    report.expect("left integrals = {a : a(E) in Q 1}", integrals == constant, witness=integrals.dim)
    functionals = []
    for r in range(n):
        values = [form.apply(algebra.product(r, q)) for q in range(n)]
        functionals.append({p * n + q: unit[p] * values[q] for p in range(n) for q in range(n) if unit[p] and values[q]})
    trace_functionals = Subspace.span_sparse(functionals, size)
    report.inform("left integrals = {tau(r .) 1 : r in E}", trace_functionals == integrals)

    # 6
    scale = to_rational(1) / n
    haar = universal.algebra.element(
        [unit[p] * form.tau[q] * scale for p in range(n) for q in range(n)]
    )
    report.extend(haar_check(universal, haar), prefix="tau/n")

    # 7
    try:
        search = search_automorphisms(field, settings)
    except InvalidPolynomial as exc:
        report.inform("grouplikes are the automorphisms", False, detail=str(exc))
    else:
        group = grouplike_group(universal, automorphism_operators(universal, search.maps))
        report.extend(group.report, prefix="grouplikes")
        report.expect("every automorphism is grouplike", len(group) == len(search.maps), witness=[e[0] for e in group.excluded])
        report.expect("order divides n", len(group) > 0 and n % len(group) == 0, witness=len(group))
        report.record("grouplike count", len(group))
        search.record(report)
        galois = len(group) == n
        report.inform(
            "Galois (order = n)", galois, detail=None if galois or search.complete else "provisional: search incomplete"
        )

    # 8
    smash = smash_product(natural_action(universal, algebra))
    report.expect("E # A -> A bijective", smash.bijective, witness=smash.quotient.dim)
    logger.info(f"{report.subject}: {'pass' if report.passed else 'FAIL'}")
    return report
