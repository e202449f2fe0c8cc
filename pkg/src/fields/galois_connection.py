"""The antitone pair Fix / Gal between sub weak Hopf algebras of End(E) and intermediate fields."""

import logging
from dataclasses import dataclass
from typing import List, Sequence

from ..algebra.operations import algebra_closure, commutant, is_subalgebra
from ..errors import ConsistencyError, NotInSubalgebra
from ..linalg.matrix import Matrix
from ..linalg.subspace import Subspace, kernel
from ..linalg.tensor import reshape, tensor_square_contains
from ..report import CheckReport
from ..wba.weak_bialgebra import WeakHopfAlgebra
from .number_field import NumberField
from .universal import multiplication_subspace, unflatten_operator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubfieldDatum:
    """A unital subalgebra F of E."""

    field: NumberField
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass(frozen=True)
class SubWHADatum:
    """A unital subalgebra of End(E) with Delta(S) in S (x) S."""

    field: NumberField
    universal: WeakHopfAlgebra
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def subfield(field: NumberField, subspace: Subspace) -> SubfieldDatum:
    """
    Raises:
        NotInSubalgebra: subspace lacks 1 or is not closed under products
    """
    if not is_subalgebra(field.algebra, subspace):
        raise NotInSubalgebra(f"Subspace of dimension {subspace.dim} is not a subfield of {field.name}")
    return SubfieldDatum(field=field, subspace=subspace)


def is_delta_closed(universal: WeakHopfAlgebra, subspace: Subspace) -> bool:
    for k in range(subspace.dim):
        image = universal.comultiply(dict(subspace.basis.row_items(k)))
        if not tensor_square_contains(subspace, image):
            return False
    return True


def sub_wha(field: NumberField, universal: WeakHopfAlgebra, subspace: Subspace) -> SubWHADatum:
    """
    Raises:
        NotInSubalgebra: subspace is not a unital subalgebra or not closed under Delta
    """
    if not is_subalgebra(universal.algebra, subspace):
        raise NotInSubalgebra(f"Subspace of dimension {subspace.dim} is not a subalgebra of {universal.name}")
    if not is_delta_closed(universal, subspace):
        raise NotInSubalgebra(f"Subspace of dimension {subspace.dim} is not closed under Delta in {universal.name}")
    return SubWHADatum(field=field, universal=universal, subspace=subspace)


def sub_wha_closure(field: NumberField, universal: WeakHopfAlgebra, subspace: Subspace) -> SubWHADatum:
    """Smallest unital subalgebra containing subspace whose comultiplication stays inside."""
    size = universal.dim
    current = algebra_closure(universal.algebra, subspace)
    while True:
        legs = []
        for k in range(current.dim):
            image = reshape(universal.comultiply(dict(current.basis.row_items(k))), size, size)
            legs.append(Subspace.row_space(image))
            legs.append(Subspace.row_space(image.transpose()))
        grown = current
        for leg in legs:
            grown = grown + leg
        grown = algebra_closure(universal.algebra, grown)
        if grown.dim == current.dim:
            break
        current = grown
    logger.debug(f"Sub weak Hopf closure of a {subspace.dim}-dimensional subspace: dimension {current.dim}")
    return SubWHADatum(field=field, universal=universal, subspace=current)


def fix(sub: SubWHADatum) -> SubfieldDatum:
    """{z in E : a(z) = a(1) z for every a in W}."""
    field = sub.field
    algebra = field.algebra
    n = field.degree
    unit = algebra.unit_sparse()
    blocks = []
    for k in range(sub.dim):
        operator = unflatten_operator(dict(sub.subspace.basis.row_items(k)), n)
        blocks.append(operator - algebra.left_matrix(operator.apply_sparse(unit)))
    result = kernel(Matrix.vstack(*blocks)) if blocks else Subspace.full(n)
    if not is_subalgebra(algebra, result):
        raise ConsistencyError(f"Fixed set of a {sub.dim}-dimensional sub weak Hopf algebra is not a subfield")
    logger.debug(f"Fix of a {sub.dim}-dimensional sub weak Hopf algebra of {sub.universal.name}: dimension {result.dim}")
    return SubfieldDatum(field=field, subspace=result)


def gal(sub: SubfieldDatum, universal: WeakHopfAlgebra) -> SubWHADatum:
    """
    F-linear endomorphisms of E, as the commutant of lambda(F) in End(E).

    Raises:
        ConsistencyError: the commutant is not closed under Delta
    """
    field = sub.field
    result = commutant(universal.algebra, multiplication_subspace(field, sub.subspace))
    if not is_delta_closed(universal, result):
        raise ConsistencyError(f"Gal of a {sub.dim}-dimensional subfield of {field.name} is not closed under Delta")
    logger.debug(f"Gal of a {sub.dim}-dimensional subfield of {field.name}: dimension {result.dim}")
    return SubWHADatum(field=field, universal=universal, subspace=result)


def check_galois_connection(
    universal: WeakHopfAlgebra, subfields: Sequence[SubfieldDatum], subwhas: Sequence[SubWHADatum]
) -> CheckReport:
    """Adjointness on the full grid, F = Fix(Gal(F)), W in Gal(Fix(W)) and antitonicity of both maps."""
    report = CheckReport(subject=f"Galois connection of {universal.name}")
    gals = [gal(F, universal) for F in subfields]
    fixes = [fix(W) for W in subwhas]
    report.record("dim Gal(F)", [g.dim for g in gals])
    report.record("dim Fix(W)", [f.dim for f in fixes])

    failing: List[List[int]] = []
    for i, W in enumerate(subwhas):
        for j, F in enumerate(subfields):
            if (W.subspace <= gals[j].subspace) != (F.subspace <= fixes[i].subspace):
                failing.append([i, j])
    report.expect("W in Gal(F) <=> F in Fix(W)", not failing, failing[0] if failing else None, violations=len(failing))

    closed = [j for j, F in enumerate(subfields) if fix(gals[j]).subspace != F.subspace]
    report.expect("F = Fix(Gal(F))", not closed, closed[0] if closed else None, violations=len(closed))

    contained = [i for i, W in enumerate(subwhas) if not W.subspace <= gal(fixes[i], universal).subspace]
    report.expect("W in Gal(Fix(W))", not contained, contained[0] if contained else None, violations=len(contained))

    antitone_gal = [
        [a, b]
        for a, F1 in enumerate(subfields)
        for b, F2 in enumerate(subfields)
        if F1.subspace <= F2.subspace and not gals[b].subspace <= gals[a].subspace
    ]
    report.expect("F1 in F2 => Gal(F2) in Gal(F1)", not antitone_gal, antitone_gal[0] if antitone_gal else None)
    antitone_fix = [
        [a, b]
        for a, W1 in enumerate(subwhas)
        for b, W2 in enumerate(subwhas)
        if W1.subspace <= W2.subspace and not fixes[b].subspace <= fixes[a].subspace
    ]
    report.expect("W1 in W2 => Fix(W2) in Fix(W1)", not antitone_fix, antitone_fix[0] if antitone_fix else None)
    logger.info(f"{report.subject} on {len(subwhas)} x {len(subfields)} grid: {'pass' if report.passed else 'FAIL'}")
    return report
