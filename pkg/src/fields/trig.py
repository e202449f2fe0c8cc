"""The cocommutative Hopf algebra Q[c, s]/(c^2 + s^2 - 1, cs) acting on Q(2^(1/4))."""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from ..algebra.maps import AlgebraMap
from ..algebra.structure import Element, FinDimAlgebra
from ..linalg.matrix import Matrix
from ..linalg.vectors import SparseVector
from ..morphisms.actions import ModuleAlgebraAction
from ..morphisms.checkers import check_strict_morphism
from ..morphisms.universal import universal_morphism
from ..report import CheckReport, MorphismReport
from ..wba.coalgebra import Coalgebra
from ..wba.weak_bialgebra import WeakHopfAlgebra
from .number_field import NumberField, number_field
from .universal import flatten_operator, universal_wha

logger = logging.getLogger(__name__)

ONE, C, S, C2 = range(4)


def trig_hopf_algebra() -> WeakHopfAlgebra:
    """
    Basis 1, c, s, c^2 with c s = 0, s^2 = 1 - c^2, c^3 = c and
    Delta(c) = c (x) c - s (x) s, Delta(s) = c (x) s + s (x) c.
    """
    table: Dict[Tuple[int, int], SparseVector] = {}
    for i in range(4):
        table[(ONE, i)] = {i: 1}
        table[(i, ONE)] = {i: 1}
    table[(C, C)] = {C2: 1}
    table[(C, C2)] = {C: 1}
    table[(C2, C)] = {C: 1}
    table[(C2, C2)] = {C2: 1}
    table[(S, S)] = {ONE: 1, C2: -1}
    algebra = FinDimAlgebra(4, table, [1, 0, 0, 0], basis_names=["1", "c", "s", "c^2"], name="H_trig")

    def pure(a: int, b: int) -> int:
        return a * 4 + b

    # Delta(c^2) = c^2 (x) c^2 + (1 - c^2) (x) (1 - c^2)
    columns = [
        {pure(ONE, ONE): 1},
        {pure(C, C): 1, pure(S, S): -1},
        {pure(C, S): 1, pure(S, C): 1},
        {pure(C2, C2): 2, pure(ONE, ONE): 1, pure(ONE, C2): -1, pure(C2, ONE): -1},
    ]
    delta = Matrix.from_sparse_columns(columns, 16)
    antipode = Matrix.diagonal([1, 1, -1, 1])
    return WeakHopfAlgebra(algebra, Coalgebra(delta, [1, 1, 0, 1]), antipode, name="H_trig")


def trig_operators() -> Dict[str, Matrix]:
    """c and s acting on 1, x, x^2, x^3, and x as a multiplication operator."""
    field = trig_field()
    return {
        "c": Matrix.diagonal([1, 0, -1, 0]),
        "s": Matrix.diagonal([0, -1, 0, 1]),
        "x": field.algebra.left_matrix({1: 1}),
    }


def trig_field() -> NumberField:
    return number_field("x^4 - 2")


def trig_action(hopf: WeakHopfAlgebra, field: NumberField) -> ModuleAlgebraAction:
    operators = trig_operators()
    c, s = operators["c"], operators["s"]
    return ModuleAlgebraAction.from_operators(hopf, field.algebra, [Matrix.identity(4), c, s, c @ c])


@dataclass
class TrigBundle:
    """H, its action on E_4 = Q[x]/(x^4 - 2), A = End(E_4) and the embedding f: H -> A."""

    hopf: WeakHopfAlgebra
    field: NumberField
    action: ModuleAlgebraAction
    universal: WeakHopfAlgebra
    embedding: AlgebraMap
    report: MorphismReport

    def generator(self, name: str) -> Element:
        """c, s or x as elements of A."""
        coords = flatten_operator(trig_operators()[name])
        return self.universal.algebra.element([coords.get(k, 0) for k in range(self.universal.dim)])


def trig_example() -> TrigBundle:
    hopf = trig_hopf_algebra()
    field = trig_field()
    action = trig_action(hopf, field)
    universal = universal_wha(field)
    embedding, report = universal_morphism(action, universal)
    logger.info(f"Trigonometric bundle built: {hopf.name} into {universal.name}")
    return TrigBundle(hopf=hopf, field=field, action=action, universal=universal, embedding=embedding, report=report)


def trig_tables(bundle: TrigBundle) -> CheckReport:
    """
    The counit and antipode on c, s, x and Delta(c) = Delta(1)(c (x) c - s (x) s),
    Delta(s) = Delta(1)(c (x) s + s (x) c) in A, plus strictness of f.
    """
    universal = bundle.universal
    algebra = universal.algebra
    report = CheckReport(subject="trigonometric generator table")
    generators = {name: bundle.generator(name) for name in ("c", "s", "x")}
    for name, g in generators.items():
        report.record(f"eps({name})", universal.counit(g.sparse()))
    report.expect("eps(c) = 4", universal.counit(generators["c"].sparse()) == 4)
    report.expect("eps(s) = 0", universal.counit(generators["s"].sparse()) == 0)
    report.expect("eps(x) = 0", universal.counit(generators["x"].sparse()) == 0)
    antipode = universal.antipode
    c, s, x = (generators[k].coords for k in ("c", "s", "x"))
    report.expect("S(c) = c", antipode.apply(c) == c)
    report.expect("S(s) = -s", antipode.apply(s) == tuple(-v for v in s))
    report.expect("S(x) = x", antipode.apply(x) == x)

    size = universal.dim
    c_sparse, s_sparse = generators["c"].sparse(), generators["s"].sparse()

    def pure(u: SparseVector, v: SparseVector, sign: int = 1) -> SparseVector:
        return {i * size + j: sign * a * b for i, a in u.items() for j, b in v.items()}

    def combine(*terms: SparseVector) -> SparseVector:
        total: SparseVector = {}
        for term in terms:
            for k, v in term.items():
                value = total.get(k, 0) + v
                if value:
                    total[k] = value
                else:
                    total.pop(k, None)
        return total

    unit_delta = universal.delta_one()
    delta_c = algebra.multiply_tensors(unit_delta, combine(pure(c_sparse, c_sparse), pure(s_sparse, s_sparse, -1)))
    delta_s = algebra.multiply_tensors(unit_delta, combine(pure(c_sparse, s_sparse), pure(s_sparse, c_sparse)))
    report.expect("Delta(c) = Delta(1)(c (x) c - s (x) s)", universal.comultiply(c_sparse) == delta_c)
    report.expect("Delta(s) = Delta(1)(c (x) s + s (x) c)", universal.comultiply(s_sparse) == delta_s)

    strict = check_strict_morphism(bundle.embedding, bundle.hopf, universal)
    report.inform("f strict", strict.passed)
    return report


def presentation_relations(bundle: TrigBundle) -> CheckReport:
    """c^2 + s^2 = 1, cs = sc = 0, cx = xs, sx = -xc, x^4 = 2 as operators on E_4."""
    operators = trig_operators()
    c, s, x = operators["c"], operators["s"], operators["x"]
    identity = Matrix.identity(4)
    report = CheckReport(subject=f"presentation of {bundle.universal.name}")
    report.expect("c^2 + s^2 = 1", c @ c + s @ s == identity)
    report.expect("cs = 0", (c @ s).is_zero())
    report.expect("sc = 0", (s @ c).is_zero())
    report.expect("cx = xs", c @ x == x @ s)
    report.expect("sx = -xc", s @ x == -(x @ c))
    report.expect("x^4 = 2", x @ x @ x @ x == identity.scale(2))
    return report
