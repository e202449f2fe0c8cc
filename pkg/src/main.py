"""Command-line workbench for weak Hopf algebras, bialgebroids and field Galois theory."""

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import yaml

from .bialgebroid import beta_l, beta_r, check_left_bialgebroid, round_trip
from .documents import (
    Document,
    action_from_document,
    bialgebroid_from_document,
    bialgebroid_to_document,
    coefficient_triples,
    load_json,
    morphism_from_document,
    number_field_from_document,
    number_field_to_document,
    subspaces_from_document,
    wba_from_document,
    wba_to_document,
    write_json,
)
from .errors import DocumentError, QgwError
from .fields import (
    AutomorphismSettings,
    check_galois_connection,
    gal,
    is_galois,
    multiplication_form,
    multiplication_operator,
    number_field,
    search_automorphisms,
    sub_wha,
    subfield,
    verify_structural_properties,
    w_galois_check,
)
from .fields.automorphisms import MIN_PRECISION_BITS
from .fields.universal import universal_wha
from .fixtures import FIXTURES, emit_fixtures
from .morphisms.checkers import KINDS, check_morphism
from .report import CheckReport
from .wba import (
    WeakHopfAlgebra,
    canonical_subalgebras,
    check_antipode,
    check_canonical_subalgebras,
    check_wba,
    left_integrals,
    right_integrals,
)

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = "config/config.yaml"

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "logging": {"level": "INFO", "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s", "file": None},
    "automorphisms": {"precision_bits": 256, "max_precision_bits": 4096, "max_coefficient": 10**6},
    "output": {"indent": 2, "color": False},
}

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

Outcome = Tuple[CheckReport, Optional[Document]]


class Workbench:
    """One CLI invocation: configuration, logging and command dispatch."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config = self._load_config(args.config, explicit=args.config != DEFAULT_CONFIG)
        self._setup_logging()

    def _load_config(self, path: str, explicit: bool) -> Dict[str, Any]:
        config = {section: dict(values) for section, values in DEFAULTS.items()}
        config_path = Path(path)
        if not config_path.exists():
            if explicit:
                raise DocumentError("config file not found", str(config_path))
            return config
        try:
            with open(config_path, "r") as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise DocumentError(f"invalid YAML: {e}", str(config_path)) from e
        if not isinstance(loaded, dict):
            raise DocumentError("top level must be a mapping", str(config_path))
        for section, values in loaded.items():
            if not isinstance(values, dict):
                raise DocumentError("section must be a mapping", f"{config_path}:{section}")
            config.setdefault(section, {}).update(values)
        return config

    def _setup_logging(self):
        log_config = self.config.get("logging", {})
        level_name = "DEBUG" if self.args.verbose else str(log_config.get("level", "INFO")).upper()
        level = getattr(logging, level_name, logging.INFO)
        log_format = log_config.get("format", DEFAULTS["logging"]["format"])

        log_file = log_config.get("file")
        if log_file:
            log_dir = os.path.dirname(log_file)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir)

        handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
        if log_file:
            handlers.append(logging.FileHandler(log_file))

        logging.basicConfig(level=level, format=log_format, handlers=handlers, force=True)

    # -- settings -----------------------------------------------------------

    @property
    def indent(self) -> Optional[int]:
        return self.config.get("output", {}).get("indent", 2)

    @property
    def color(self) -> bool:
        env = os.environ.get("QGW_COLOR")
        if env is not None:
            return env.strip().lower() in ("1", "true", "yes", "always")
        return bool(self.config.get("output", {}).get("color", False)) and sys.stdout.isatty()

    def automorphism_settings(self) -> AutomorphismSettings:
        section = self.config.get("automorphisms", {})
        precision = self.args.precision or section.get("precision_bits", 256)
        if int(precision) < MIN_PRECISION_BITS:
            raise DocumentError(f"precision must be at least {MIN_PRECISION_BITS} bits, got {precision}", "--precision")
        return AutomorphismSettings(
            precision_bits=int(precision),
            max_precision_bits=max(int(section.get("max_precision_bits", 4096)), int(precision)),
            max_coefficient=int(section.get("max_coefficient", 10**6)),
        )

    # -- dispatch -----------------------------------------------------------

    def run(self) -> int:
        handler: Callable[[], Outcome] = getattr(self, f"_cmd_{self.args.group}_{self.args.verb}".replace("-", "_"))
        started = time.perf_counter()
        report, extra = handler()
        elapsed = time.perf_counter() - started
        print(report.to_table(color=self.color))
        logger.info(f"{self.args.group} {self.args.verb} finished in {elapsed:.2f}s: {'pass' if report.passed else 'FAIL'}")
        if getattr(self.args, "emit", None):
            document: Document = {"command": self.command_echo(), "report": report.to_document()}
            if extra:
                document.update(extra)
            write_json(document, self.args.emit, self.indent)
        return EXIT_PASS if report.passed else EXIT_FAIL

    def command_echo(self) -> List[str]:
        return [self.args.group, self.args.verb] + [str(p) for p in getattr(self.args, "inputs", [])]

    def _input(self) -> Tuple[Document, Path]:
        path = Path(self.args.inputs[0])
        return load_json(path), path.parent

    def _field(self):
        if self.args.poly:
            return number_field(self.args.poly)
        if self.args.field:
            return number_field_from_document(load_json(self.args.field))
        raise DocumentError("give --poly or --field")

    # wba

    def _cmd_wba_check(self) -> Outcome:
        document, _ = self._input()
        wba = wba_from_document(document)
        report = check_wba(wba)
        if isinstance(wba, WeakHopfAlgebra):
            report.extend(check_antipode(wba, wba.antipode), prefix="antipode")
        return report, None

    def _cmd_wba_subalgebras(self) -> Outcome:
        document, _ = self._input()
        wba = wba_from_document(document)
        canonical = canonical_subalgebras(wba)
        report = check_canonical_subalgebras(wba, canonical)
        report.record("L", canonical.L.basis)
        report.record("R", canonical.R.basis)
        return report, None

    def _cmd_wba_integrals(self) -> Outcome:
        document, _ = self._input()
        wba = wba_from_document(document)
        canonical = canonical_subalgebras(wba)
        report = CheckReport(subject=f"integrals of {wba.name}")
        left = left_integrals(wba, canonical)
        right = right_integrals(wba, canonical)
        report.record("left integrals", left.basis)
        report.record("right integrals", right.basis)
        report.inform("nonzero left integrals", left.dim > 0)
        return report, None

    # bialgebroid

    def _cmd_bialgebroid_check(self) -> Outcome:
        document, base_dir = self._input()
        return check_left_bialgebroid(bialgebroid_from_document(document, base_dir)), None

    def _cmd_bialgebroid_from_wba(self) -> Outcome:
        document, _ = self._input()
        wba = wba_from_document(document)
        bialgebroid = beta_r(wba) if self.args.right else beta_l(wba)
        report = check_left_bialgebroid(bialgebroid)
        return report, {"bialgebroid": bialgebroid_to_document(bialgebroid)}

    def _cmd_bialgebroid_roundtrip(self) -> Outcome:
        document, _ = self._input()
        _, report = round_trip(wba_from_document(document))
        return report, None

    # morphism

    def _cmd_morphism_check(self) -> Outcome:
        document, base_dir = self._input()
        kind, f, source, target = morphism_from_document(document, base_dir)
        kind = self.args.kind or kind
        if (kind == "bialgebroid") != (document.get("kind") == "bialgebroid"):
            raise DocumentError(f"kind {kind} does not match the document objects", "morphism.kind")
        return check_morphism(kind, f, source, target), None

    # galois

    def _cmd_galois_build(self) -> Outcome:
        field = self._field()
        universal = universal_wha(field)
        report = check_wba(universal)
        report.extend(check_antipode(universal, universal.antipode), prefix="antipode")
        n = field.degree
        tables: Document = {"field": number_field_to_document(field), "wha": wba_to_document(universal)}
        unit_form = multiplication_form(field, universal.delta_one())
        if unit_form is not None:
            tables["delta_one"] = coefficient_triples(unit_form)
            report.record("Delta(1)", tables["delta_one"])
        if n > 1:
            x_form = multiplication_form(field, universal.comultiply(multiplication_operator(field, {1: 1})))
            if x_form is not None:
                tables["delta_x"] = coefficient_triples(x_form)
                report.record("Delta(x)", tables["delta_x"])
        return report, {"tables": tables}

    def _cmd_galois_properties(self) -> Outcome:
        field = self._field()
        return verify_structural_properties(field, settings=self.automorphism_settings()), None

    def _cmd_galois_automorphisms(self) -> Outcome:
        field = self._field()
        search = search_automorphisms(field, self.automorphism_settings())
        maps = search.maps
        report = CheckReport(subject=f"automorphisms of {field.name}")
        report.record("count", len(maps))
        report.record("maps", [f.label for f in maps])
        search.record(report)
        report.expect("identity found", bool(maps) and maps[0].matrix.is_identity())
        report.expect("count divides n", bool(maps) and field.degree % len(maps) == 0, witness=len(maps))
        galois = is_galois(field, maps)
        report.inform("Galois", galois, detail=None if galois or search.complete else "provisional: search incomplete")
        return report, {"automorphisms": [f.matrix.to_strings() for f in maps]}

    def _cmd_galois_connection(self) -> Outcome:
        field = self._field()
        universal = universal_wha(field)
        document = load_json(self.args.subfields)
        spaces = subspaces_from_document(document.get("subfields"), field.degree, "subfields")
        subfields = [subfield(field, s) for s in spaces]
        if "subwhas" in document:
            wha_spaces = subspaces_from_document(document["subwhas"], universal.dim, "subwhas")
            subwhas = [sub_wha(field, universal, s) for s in wha_spaces]
        else:
            subwhas = [gal(F, universal) for F in subfields]
        return check_galois_connection(universal, subfields, subwhas), None

    def _cmd_galois_w_galois(self) -> Outcome:
        document, base_dir = self._input()
        field, action = action_from_document(document, base_dir)
        return w_galois_check(field, action), None

    # fixtures

    def _cmd_fixtures_emit(self) -> Outcome:
        paths = emit_fixtures(self.args.name, self.args.out, self.indent)
        report = CheckReport(subject=f"fixture {self.args.name}")
        report.record("files", [str(p) for p in paths])
        return report, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgw", description="Weak Hopf algebras, bialgebroids and field Galois theory over Q")
    parser.add_argument("--config", "-c", default=DEFAULT_CONFIG, help="Path to config file")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", help="Write the machine-readable report to this file")
    common.add_argument("--precision", type=int, help="Starting precision in bits for the automorphism search")

    groups = parser.add_subparsers(dest="group", required=True)

    wba = groups.add_parser("wba", help="Weak bialgebra checks").add_subparsers(dest="verb", required=True)
    for verb in ("check", "subalgebras", "integrals"):
        sub = wba.add_parser(verb, parents=[common])
        sub.add_argument("inputs", nargs=1, help="WBA document")

    bialgebroid = groups.add_parser("bialgebroid", help="Bialgebroid checks").add_subparsers(dest="verb", required=True)
    for verb in ("check", "from-wba", "roundtrip"):
        sub = bialgebroid.add_parser(verb, parents=[common])
        sub.add_argument("inputs", nargs=1, help="Bialgebroid document (check) or WBA document")
        if verb == "from-wba":
            sub.add_argument("--right", action="store_true", help="Build the right bialgebroid over R")

    morphism = groups.add_parser("morphism", help="Morphism checks").add_subparsers(dest="verb", required=True)
    sub = morphism.add_parser("check", parents=[common])
    sub.add_argument("inputs", nargs=1, help="Morphism document")
    sub.add_argument("--kind", choices=KINDS, help="Override the kind named in the document")

    galois = groups.add_parser("galois", help="Number fields and End(E)").add_subparsers(dest="verb", required=True)
    for verb in ("build", "properties", "automorphisms", "connection"):
        sub = galois.add_parser(verb, parents=[common])
        sub.add_argument("--poly", help='Minimal polynomial, e.g. "x^4-2"')
        sub.add_argument("--field", help="Number-field document")
        if verb == "connection":
            sub.add_argument("--subfields", required=True, help='Document {"subfields": [...], "subwhas"?: [...]}')
    sub = galois.add_parser("w-galois", parents=[common])
    sub.add_argument("inputs", nargs=1, help="Action document")

    fixtures = groups.add_parser("fixtures", help="Write named fixtures")
    fixtures.add_argument("name", choices=sorted(FIXTURES))
    fixtures.add_argument("--out", default="fixtures", help="Output directory")
    fixtures.set_defaults(verb="emit", emit=None, precision=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        workbench = Workbench(args)
        return workbench.run()
    except (QgwError, OSError) as e:
        logger.error(f"{args.group} {getattr(args, 'verb', '')}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
