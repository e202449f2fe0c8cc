"""JSON documents for algebras, weak bialgebras, bialgebroids, morphisms, fields and subspaces."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .algebra.maps import AlgebraMap
from .algebra.structure import FinDimAlgebra
from .bialgebroid.bialgebroid import LeftBialgebroid
from .errors import DimensionMismatch, DocumentError, QgwError
from .fields.number_field import NumberField, number_field
from .linalg.matrix import Matrix
from .linalg.rational import Scalar, format_rational, parse_rational
from .linalg.subspace import Subspace
from .morphisms.actions import ModuleAlgebraAction
from .morphisms.checkers import KINDS
from .wba.coalgebra import Coalgebra
from .wba.weak_bialgebra import WeakBialgebra, WeakHopfAlgebra

logger = logging.getLogger(__name__)

Document = Dict[str, Any]
Reference = Union[str, Document]


# -- reading --------------------------------------------------------------------


def load_json(path: Union[str, Path]) -> Document:
    """
    Raises:
        DocumentError: file missing, not JSON, or not an object
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read file ({e.strerror})", str(path)) from e
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from e
    if not isinstance(document, dict):
        raise DocumentError("top level must be an object", str(path))
    logger.debug(f"Loaded document {path}")
    return document


def resolve(reference: Reference, base_dir: Optional[Path], location: str) -> Tuple[Document, Optional[Path]]:
    """An inline document, or a path relative to the referring document's directory."""
    if isinstance(reference, dict):
        return reference, base_dir
    if isinstance(reference, str):
        path = Path(reference)
        if not path.is_absolute() and base_dir is not None:
            path = base_dir / path
        return load_json(path), path.parent
    raise DocumentError("expected an inline document or a file reference", location)


def _field(document: Document, key: str, location: str) -> Any:
    if key not in document:
        raise DocumentError(f"missing key {key!r}", location)
    return document[key]


def _rational(value: Any, location: str) -> Scalar:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(f"expected a rational string, got {value!r}", location)
    try:
        return parse_rational(str(value))
    except ValueError as e:
        raise DocumentError(str(e), location) from e


def _integer(value: Any, location: str, limit: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0 or (limit is not None and value >= limit):
        raise DocumentError(f"expected an index below {limit}, got {value!r}", location)
    return value


def _vector(value: Any, length: Optional[int], location: str) -> List[Scalar]:
    if not isinstance(value, list):
        raise DocumentError("expected a list", location)
    if length is not None and len(value) != length:
        raise DocumentError(f"expected {length} entries, got {len(value)}", location)
    return [_rational(v, f"{location}[{k}]") for k, v in enumerate(value)]


def _matrix(value: Any, location: str, rows: Optional[int] = None, cols: Optional[int] = None) -> Matrix:
    if not isinstance(value, list):
        raise DocumentError("expected a row-major nested list", location)
    if rows is not None and len(value) != rows:
        raise DocumentError(f"expected {rows} rows, got {len(value)}", location)
    parsed = [_vector(row, cols, f"{location}[{i}]") for i, row in enumerate(value)]
    width = cols if cols is not None else (len(parsed[0]) if parsed else 0)
    for i, row in enumerate(parsed):
        if len(row) != width:
            raise DocumentError(f"row of length {len(row)}, expected {width}", f"{location}[{i}]")
    return Matrix.from_rows(parsed, cols=width)


def _matrix_to_document(matrix: Matrix) -> List[List[str]]:
    return matrix.to_strings()


# -- algebras -------------------------------------------------------------------


def algebra_to_document(algebra: FinDimAlgebra) -> Document:
    document: Document = {
        "name": algebra.name,
        "dim": algebra.dim,
        "mult": [[[format_rational(c) for c in vector] for vector in row] for row in algebra.mult_array()],
        "unit": [format_rational(c) for c in algebra.unit],
    }
    if algebra.basis_names is not None:
        document["basis_names"] = list(algebra.basis_names)
    return document


def algebra_from_document(document: Document, location: str = "algebra") -> FinDimAlgebra:
    dim = _integer(_field(document, "dim", location), f"{location}.dim")
    if dim < 1:
        raise DocumentError("dimension must be positive", f"{location}.dim")
    mult = _field(document, "mult", location)
    if not isinstance(mult, list) or len(mult) != dim:
        raise DocumentError(f"expected {dim} rows", f"{location}.mult")
    table = {}
    for i, row in enumerate(mult):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"expected {dim} products", f"{location}.mult[{i}]")
        for j, vector in enumerate(row):
            coords = _vector(vector, dim, f"{location}.mult[{i}][{j}]")
            table[(i, j)] = {k: c for k, c in enumerate(coords) if c != 0}
    unit = _vector(_field(document, "unit", location), dim, f"{location}.unit")
    names = document.get("basis_names")
    if names is not None and (not isinstance(names, list) or len(names) != dim):
        raise DocumentError(f"expected {dim} basis names", f"{location}.basis_names")
    return FinDimAlgebra(dim, table, unit, basis_names=names, name=document.get("name"))


# -- weak bialgebras ------------------------------------------------------------


def wba_to_document(wba: WeakBialgebra) -> Document:
    document = algebra_to_document(wba.algebra)
    document["name"] = wba.name
    document["delta"] = [
        [[i, j, format_rational(c)] for (i, j), c in sorted(wba.coalgebra.pairs_of(w).items())] for w in range(wba.dim)
    ]
    document["epsilon"] = [format_rational(c) for c in wba.epsilon]
    if isinstance(wba, WeakHopfAlgebra):
        document["antipode"] = _matrix_to_document(wba.antipode)
    return document


def wba_from_document(document: Document, location: str = "wba") -> WeakBialgebra:
    algebra = algebra_from_document(document, location)
    n = algebra.dim
    delta = _field(document, "delta", location)
    if not isinstance(delta, list) or len(delta) != n:
        raise DocumentError(f"expected {n} coproduct entries", f"{location}.delta")
    columns = []
    for w, triples in enumerate(delta):
        where = f"{location}.delta[{w}]"
        if not isinstance(triples, list):
            raise DocumentError("expected a list of [i, j, value] triples", where)
        column: Dict[int, Scalar] = {}
        for k, triple in enumerate(triples):
            if not isinstance(triple, list) or len(triple) != 3:
                raise DocumentError("expected [i, j, value]", f"{where}[{k}]")
            i = _integer(triple[0], f"{where}[{k}][0]", n)
            j = _integer(triple[1], f"{where}[{k}][1]", n)
            column[i * n + j] = column.get(i * n + j, 0) + _rational(triple[2], f"{where}[{k}][2]")
        columns.append(column)
    epsilon = _vector(_field(document, "epsilon", location), n, f"{location}.epsilon")
    coalgebra = Coalgebra(Matrix.from_sparse_columns(columns, n * n), epsilon)
    name = document.get("name")
    if "antipode" in document:
        antipode = _matrix(document["antipode"], f"{location}.antipode", n, n)
        return WeakHopfAlgebra(algebra, coalgebra, antipode, name=name)
    return WeakBialgebra(algebra, coalgebra, name=name)


# -- bialgebroids ---------------------------------------------------------------


def bialgebroid_to_document(bialgebroid: LeftBialgebroid) -> Document:
    return {
        "name": bialgebroid.name,
        "total": algebra_to_document(bialgebroid.total),
        "base": algebra_to_document(bialgebroid.base),
        "s": _matrix_to_document(bialgebroid.source.matrix),
        "t": _matrix_to_document(bialgebroid.target.matrix),
        "gamma_representative": _matrix_to_document(bialgebroid.gamma_representative),
        "pi": _matrix_to_document(bialgebroid.counit),
    }


def bialgebroid_from_document(
    document: Document, base_dir: Optional[Path] = None, location: str = "bialgebroid"
) -> LeftBialgebroid:
    total_doc, _ = resolve(_field(document, "total", location), base_dir, f"{location}.total")
    base_doc, _ = resolve(_field(document, "base", location), base_dir, f"{location}.base")
    total = algebra_from_document(total_doc, f"{location}.total")
    base = algebra_from_document(base_doc, f"{location}.base")
    n, r = total.dim, base.dim
    s = _matrix(_field(document, "s", location), f"{location}.s", n, r)
    t = _matrix(_field(document, "t", location), f"{location}.t", n, r)
    gamma = _matrix(_field(document, "gamma_representative", location), f"{location}.gamma_representative", n * n, n)
    pi = _matrix(_field(document, "pi", location), f"{location}.pi", r, n)
    return LeftBialgebroid(
        AlgebraMap(base, total, s, name="s"),
        AlgebraMap(base, total, t, name="t"),
        gamma,
        pi,
        name=document.get("name"),
    )


# -- morphisms ------------------------------------------------------------------


def morphism_to_document(f: AlgebraMap, kind: str, domain: Document, codomain: Document) -> Document:
    return {"kind": kind, "matrix": _matrix_to_document(f.matrix), "domain": domain, "codomain": codomain}


def morphism_from_document(
    document: Document, base_dir: Optional[Path] = None, location: str = "morphism"
) -> Tuple[str, AlgebraMap, Any, Any]:
    """
    Returns:
        (kind, f, domain, codomain); the objects are bialgebroids for kind "bialgebroid"
        and weak bialgebras otherwise
    """
    kind = _field(document, "kind", location)
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}", f"{location}.kind")
    domain_doc, domain_dir = resolve(_field(document, "domain", location), base_dir, f"{location}.domain")
    codomain_doc, codomain_dir = resolve(_field(document, "codomain", location), base_dir, f"{location}.codomain")
    if kind == "bialgebroid":
        domain = bialgebroid_from_document(domain_doc, domain_dir, f"{location}.domain")
        codomain = bialgebroid_from_document(codomain_doc, codomain_dir, f"{location}.codomain")
        source_algebra, target_algebra = domain.total, codomain.total
    else:
        domain = wba_from_document(domain_doc, f"{location}.domain")
        codomain = wba_from_document(codomain_doc, f"{location}.codomain")
        source_algebra, target_algebra = domain.algebra, codomain.algebra
    matrix = _matrix(_field(document, "matrix", location), f"{location}.matrix", target_algebra.dim, source_algebra.dim)
    return kind, AlgebraMap(source_algebra, target_algebra, matrix, name="f"), domain, codomain


# -- fields and subspaces -------------------------------------------------------


def number_field_to_document(field: NumberField) -> Document:
    return {"min_poly": [format_rational(c) for c in field.coefficients()]}


def number_field_from_document(document: Document, location: str = "field") -> NumberField:
    coefficients = _vector(_field(document, "min_poly", location), None, f"{location}.min_poly")
    try:
        return number_field(coefficients)
    except QgwError as e:
        raise DocumentError(str(e), f"{location}.min_poly") from e


def subspace_to_document(subspace: Subspace) -> Document:
    return {"ambient_dim": subspace.ambient_dim, "basis": _matrix_to_document(subspace.basis)}


def subspace_from_document(document: Document, ambient_dim: int, location: str = "subspace") -> Subspace:
    declared = document.get("ambient_dim", ambient_dim)
    if declared != ambient_dim:
        raise DocumentError(f"ambient dimension {declared}, expected {ambient_dim}", f"{location}.ambient_dim")
    rows = _matrix(_field(document, "basis", location), f"{location}.basis", cols=ambient_dim)
    return Subspace.row_space(rows)


def subspaces_from_document(document: Any, ambient_dim: int, location: str) -> List[Subspace]:
    if not isinstance(document, list):
        raise DocumentError("expected a list of subspace documents", location)
    return [subspace_from_document(d, ambient_dim, f"{location}[{k}]") for k, d in enumerate(document)]


# -- writing --------------------------------------------------------------------


def dumps(document: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON text; key order is the construction order."""
    return json.dumps(document, indent=indent, ensure_ascii=False) + "\n"


def write_json(document: Any, path: Union[str, Path], indent: Optional[int] = 2) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(document, indent), encoding="utf-8")
    logger.debug(f"Wrote {path}")
    return path


def parse_document(kind: str, document: Document, base_dir: Optional[Path] = None) -> Any:
    """Dispatch on a document kind; used by the CLI and the fixture round trip."""
    try:
        if kind == "algebra":
            return algebra_from_document(document)
        if kind == "wba":
            return wba_from_document(document)
        if kind == "bialgebroid":
            return bialgebroid_from_document(document, base_dir)
        if kind == "field":
            return number_field_from_document(document)
        if kind == "action":
            return action_from_document(document, base_dir)
    except DimensionMismatch as e:
        raise DocumentError(str(e), kind) from e
    raise DocumentError(f"unknown document kind {kind!r}")


def coefficient_triples(table: Dict[Tuple[int, int], Scalar]) -> List[Sequence[Any]]:
    """[k, l, "p/q"] rows of a coefficient table in index order."""
    return [[k, l, format_rational(c)] for (k, l), c in sorted(table.items())]


# -- actions --------------------------------------------------------------------


def action_to_document(action: ModuleAlgebraAction, wba: Reference, field: NumberField) -> Document:
    return {
        "wba": wba,
        "field": number_field_to_document(field),
        "operators": [_matrix_to_document(action.basis_operator(w)) for w in range(action.wba.dim)],
    }


def action_from_document(
    document: Document, base_dir: Optional[Path] = None, location: str = "action"
) -> Tuple[NumberField, ModuleAlgebraAction]:
    wba_doc, _ = resolve(_field(document, "wba", location), base_dir, f"{location}.wba")
    wba = wba_from_document(wba_doc, f"{location}.wba")
    field = number_field_from_document(_field(document, "field", location), f"{location}.field")
    operators = _field(document, "operators", location)
    if not isinstance(operators, list) or len(operators) != wba.dim:
        raise DocumentError(f"expected {wba.dim} operators", f"{location}.operators")
    n = field.degree
    matrices = [_matrix(op, f"{location}.operators[{w}]", n, n) for w, op in enumerate(operators)]
    return field, ModuleAlgebraAction.from_operators(wba, field.algebra, matrices)
