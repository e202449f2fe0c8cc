"""The qgw command line: exit codes, emitted reports and configuration."""

import json

import pytest
import yaml

from src.fields import AutomorphismSearch
from src.main import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, main


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("QGW_COLOR", raising=False)
    return tmp_path


@pytest.fixture
def blowup(workdir):
    assert main(["fixtures", "blowup-z2-2", "--out", "blowup"]) == EXIT_PASS
    return workdir / "blowup"


def test_fixtures_are_written(blowup):
    assert sorted(p.name for p in blowup.iterdir()) == ["blowup-z2-2.json", "diag-embed.json", "z2.json"]


def test_wba_verbs(blowup):
    for verb in ("check", "subalgebras", "integrals"):
        assert main(["wba", verb, str(blowup / "blowup-z2-2.json")]) == EXIT_PASS


def test_broken_coproduct_fails_with_a_witness(blowup):
    document = json.loads((blowup / "z2.json").read_text())
    # Delta(g) = g (x) g + 1 (x) 1
    document["delta"][1] = [[0, 0, "1"], [1, 1, "1"]]
    broken = blowup / "broken.json"
    broken.write_text(json.dumps(document))
    emitted = blowup / "broken-report.json"
    assert main(["wba", "check", str(broken), "--emit", str(emitted)]) == EXIT_FAIL
    clauses = {c["name"]: c for c in json.loads(emitted.read_text())["report"]["clauses"]}
    assert clauses["coassociativity"]["passed"] is False
    assert clauses["coassociativity"]["witness"] == 1


def test_morphism_kind_decides_the_exit_code(blowup):
    document = str(blowup / "diag-embed.json")
    assert main(["morphism", "check", document]) == EXIT_FAIL
    assert main(["morphism", "check", document, "--kind", "weak-left"]) == EXIT_PASS
    assert main(["morphism", "check", document, "--kind", "bialgebroid"]) == EXIT_INPUT


def test_bialgebroid_from_wba_then_check(blowup):
    emitted = blowup / "report.json"
    assert main(["bialgebroid", "from-wba", str(blowup / "z2.json"), "--emit", str(emitted)]) == EXIT_PASS
    document = json.loads(emitted.read_text())
    assert document["command"] == ["bialgebroid", "from-wba", str(blowup / "z2.json")]
    assert document["report"]["passed"] is True
    bialgebroid = blowup / "bialgebroid.json"
    bialgebroid.write_text(json.dumps(document["bialgebroid"]))
    assert main(["bialgebroid", "check", str(bialgebroid)]) == EXIT_PASS
    assert main(["bialgebroid", "roundtrip", str(blowup / "blowup-z2-2.json")]) == EXIT_PASS


def test_galois_build_emits_the_coproduct_tables(workdir):
    out = workdir / "e4.json"
    assert main(["galois", "build", "--poly", "x^4-2", "--emit", str(out)]) == EXIT_PASS
    tables = json.loads(out.read_text())["tables"]
    assert tables["delta_one"] == [[0, 0, "1/4"], [1, 3, "1/8"], [2, 2, "1/8"], [3, 1, "1/8"]]
    assert tables["delta_x"] == [[0, 1, "1/4"], [1, 0, "1/4"], [2, 3, "1/8"], [3, 2, "1/8"]]
    assert tables["field"] == {"min_poly": ["-2", "0", "0", "0", "1"]}


def test_galois_automorphisms(workdir):
    out = workdir / "auts.json"
    assert main(["galois", "automorphisms", "--poly", "x^3-2", "--emit", str(out), "--precision", "128"]) == EXIT_PASS
    document = json.loads(out.read_text())
    assert document["report"]["values"]["count"] == 1
    assert document["report"]["values"]["unmatched roots"] == 0
    assert document["automorphisms"] == [[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]]


def test_galois_connection_from_a_subfield_document(workdir):
    subfields = workdir / "subfields.json"
    subfields.write_text(
        json.dumps(
            {
                "subfields": [
                    {"basis": [["1", "0", "0", "0"]]},
                    {"basis": [["1", "0", "0", "0"], ["0", "0", "1", "0"]]},
                ]
            }
        )
    )
    assert main(["galois", "connection", "--poly", "x^4-2", "--subfields", str(subfields)]) == EXIT_PASS


@pytest.mark.slow
def test_trig_action_is_w_galois(workdir):
    assert main(["fixtures", "trig", "--out", "trig"]) == EXIT_PASS
    assert main(["galois", "w-galois", str(workdir / "trig" / "action.json")]) == EXIT_PASS


@pytest.mark.parametrize(
    "argv",
    [
        ["wba", "check", "missing.json"],
        ["galois", "build", "--poly", "2*x^2-1"],
        ["galois", "build", "--poly", "__import__('os').system('touch marker') or x^2-2"],
        ["galois", "build"],
        ["galois", "automorphisms", "--poly", "x^2-2", "--precision", "32"],
        ["--config", "absent.yaml", "galois", "build", "--poly", "x^2-2"],
    ],
)
def test_input_errors_exit_with_two(workdir, capsys, argv):
    assert main(argv) == EXIT_INPUT
    assert capsys.readouterr().err.startswith("Error: ")
    assert not (workdir / "marker").exists()


def test_config_file_and_color(workdir, capsys, monkeypatch):
    config = workdir / "qgw.yaml"
    config.write_text(yaml.safe_dump({"logging": {"level": "DEBUG", "file": "logs/qgw.log"}, "output": {"indent": 0}}))
    out = workdir / "report.json"
    monkeypatch.setenv("QGW_COLOR", "always")
    assert main(["--config", str(config), "galois", "build", "--poly", "x^2-2", "--emit", str(out)]) == EXIT_PASS
    assert (workdir / "logs" / "qgw.log").exists()
    assert "\x1b[" in capsys.readouterr().out
    assert json.loads(out.read_text())["tables"]["delta_one"] == [[0, 0, "1/2"], [1, 1, "1/4"]]


def test_config_sections_must_be_mappings(workdir):
    config = workdir / "bad.yaml"
    config.write_text("logging: verbose\n")
    assert main(["--config", str(config), "galois", "build", "--poly", "x^2-2"]) == EXIT_INPUT


def test_empty_automorphism_search_fails_cleanly(workdir, monkeypatch):
    empty = AutomorphismSearch(maps=[], bits=256, max_coefficient=1, unmatched=2)
    monkeypatch.setattr("src.main.search_automorphisms", lambda field, settings: empty)
    out = workdir / "auts.json"
    assert main(["galois", "automorphisms", "--poly", "x^2-2", "--emit", str(out)]) == EXIT_FAIL
    document = json.loads(out.read_text())
    clauses = {c["name"]: c for c in document["report"]["clauses"]}
    assert clauses["identity found"]["passed"] is False
    assert clauses["count divides n"]["passed"] is False
    assert clauses["Galois"]["detail"] == "provisional: search incomplete"
    assert document["report"]["values"]["unmatched roots"] == 2
