"""JSON documents: reading, error locations, file references and fixture output."""

import json

import pytest

from src.bialgebroid import beta_l, check_left_bialgebroid
from src.documents import (
    action_from_document,
    bialgebroid_from_document,
    bialgebroid_to_document,
    coefficient_triples,
    dumps,
    load_json,
    morphism_from_document,
    number_field_from_document,
    parse_document,
    subspace_from_document,
    subspace_to_document,
    wba_from_document,
    wba_to_document,
)
from src.errors import DocumentError, UnknownFixture
from src.fixtures import emit_fixtures, fixture_documents
from src.linalg import Subspace
from src.morphisms import check_module_algebra_action
from src.wba import WeakHopfAlgebra, check_wba


@pytest.fixture(scope="module")
def blowup_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("blowup")
    emit_fixtures("blowup-z2-2", directory)
    return directory


def test_wba_document_keeps_the_structure(z2, universal_e2):
    for wba in (z2, universal_e2):
        parsed = wba_from_document(json.loads(dumps(wba_to_document(wba))))
        assert parsed.delta == wba.delta
        assert parsed.epsilon == wba.epsilon
        assert parsed.antipode == wba.antipode
        assert parsed.name == wba.name


def test_wba_without_antipode_is_a_weak_bialgebra(z2):
    document = wba_to_document(z2)
    del document["antipode"]
    parsed = wba_from_document(document)
    assert not isinstance(parsed, WeakHopfAlgebra)
    assert check_wba(parsed).passed


@pytest.mark.parametrize(
    "edit, location",
    [
        (lambda d: d.update(epsilon=["1"]), "wba.epsilon"),
        (lambda d: d.update(epsilon=["1", 0.5]), "wba.epsilon[1]"),
        (lambda d: d["delta"][0].append([2, 0, "1"]), "wba.delta[0][1][0]"),
        (lambda d: d["delta"][1].append([0, 1]), "wba.delta[1][1]"),
        (lambda d: d.pop("unit"), "wba"),
        (lambda d: d["mult"][0].pop(), "wba.mult[0]"),
        (lambda d: d.update(antipode=[["1", "0"]]), "wba.antipode"),
    ],
)
def test_wba_document_errors_name_their_location(z2, edit, location):
    document = json.loads(dumps(wba_to_document(z2)))
    edit(document)
    with pytest.raises(DocumentError) as info:
        wba_from_document(document)
    assert info.value.location == location


def test_load_json_errors(tmp_path):
    with pytest.raises(DocumentError):
        load_json(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text('{"dim": 2,\n  oops}')
    with pytest.raises(DocumentError) as info:
        load_json(broken)
    assert info.value.location.startswith(f"{broken}:2:")
    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]")
    with pytest.raises(DocumentError, match="top level must be an object"):
        load_json(listed)


def test_bialgebroid_document(universal_e2):
    document = json.loads(dumps(bialgebroid_to_document(beta_l(universal_e2))))
    parsed = bialgebroid_from_document(document)
    assert parsed.base.dim == 2
    assert check_left_bialgebroid(parsed).passed


def test_morphism_document_resolves_references(blowup_dir):
    document = load_json(blowup_dir / "diag-embed.json")
    kind, f, source, target = morphism_from_document(document, blowup_dir)
    assert kind == "strict"
    assert f.matrix.shape == (8, 2)
    assert (source.dim, target.dim) == (2, 8)


def test_morphism_document_rejects_unknown_kinds(blowup_dir):
    document = load_json(blowup_dir / "diag-embed.json")
    document["kind"] = "lax"
    with pytest.raises(DocumentError) as info:
        morphism_from_document(document, blowup_dir)
    assert info.value.location == "morphism.kind"


def test_action_document_from_the_trig_fixture(tmp_path):
    emit_fixtures("trig", tmp_path)
    field, action = action_from_document(load_json(tmp_path / "action.json"), tmp_path)
    assert field.degree == 4
    assert action.wba.dim == 4
    assert check_module_algebra_action(action).passed


def test_number_field_document():
    field = number_field_from_document({"min_poly": ["-2", "0", "1"]})
    assert field.degree == 2
    with pytest.raises(DocumentError) as info:
        number_field_from_document({"min_poly": ["0", "0", "1"]})
    assert info.value.location == "field.min_poly"


def test_subspace_document():
    line = Subspace.span([[1, 2]], 2)
    assert subspace_from_document(subspace_to_document(line), 2) == line
    with pytest.raises(DocumentError) as info:
        subspace_from_document(subspace_to_document(line), 3)
    assert info.value.location == "subspace.ambient_dim"


def test_parse_document_dispatch(z2):
    assert parse_document("wba", wba_to_document(z2)).dim == 2
    with pytest.raises(DocumentError, match="unknown document kind"):
        parse_document("sheaf", {})


def test_coefficient_triples():
    assert coefficient_triples({(1, 1): 1, (0, 0): 2}) == [[0, 0, "2"], [1, 1, "1"]]


def test_fixture_output_is_byte_stable(tmp_path):
    first = emit_fixtures("e2-universal", tmp_path / "first")
    second = emit_fixtures("e2-universal", tmp_path / "second")
    assert [p.name for p in first] == ["e2-universal.json", "e2-universal-field.json"]
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes()


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture_documents("e5-universal")
