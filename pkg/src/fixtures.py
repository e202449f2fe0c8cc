"""Named fixtures: the worked objects written out as documents."""

import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

from .documents import (
    Document,
    action_to_document,
    morphism_to_document,
    number_field_to_document,
    wba_to_document,
    write_json,
)
from .errors import UnknownFixture
from .fields.trig import trig_example
from .fields.number_field import number_field
from .fields.universal import universal_wha
from .morphisms.blow_up import blow_up, diagonal_embedding
from .wba.hopf import cyclic_group_hopf

logger = logging.getLogger(__name__)

FixtureFiles = Dict[str, Document]

UNIVERSAL_POLYNOMIALS = {
    "e2-universal": "x^2 - 2",
    "e3-universal": "x^3 - 2",
    "e4-universal": "x^4 - 2",
}


def _trig() -> FixtureFiles:
    bundle = trig_example()
    return {
        "H.json": wba_to_document(bundle.hopf),
        "action.json": action_to_document(bundle.action, "H.json", bundle.field),
        "A.json": wba_to_document(bundle.universal),
        "embedding.json": morphism_to_document(bundle.embedding, "weak-left", "H.json", "A.json"),
    }


def _blowup_z2_2() -> FixtureFiles:
    hopf = cyclic_group_hopf(2)
    blown_up = blow_up(hopf, 2)
    embedding = diagonal_embedding(hopf, blown_up, 2)
    return {
        "z2.json": wba_to_document(hopf),
        "blowup-z2-2.json": wba_to_document(blown_up),
        "diag-embed.json": morphism_to_document(embedding, "strict", "z2.json", "blowup-z2-2.json"),
    }


def _universal(name: str) -> Callable[[], FixtureFiles]:
    def build() -> FixtureFiles:
        field = number_field(UNIVERSAL_POLYNOMIALS[name])
        return {
            f"{name}.json": wba_to_document(universal_wha(field)),
            f"{name}-field.json": number_field_to_document(field),
        }

    return build


FIXTURES: Dict[str, Callable[[], FixtureFiles]] = {
    "trig": _trig,
    "blowup-z2-2": _blowup_z2_2,
    **{name: _universal(name) for name in UNIVERSAL_POLYNOMIALS},
}


def fixture_documents(name: str) -> FixtureFiles:
    """
    Raises:
        UnknownFixture: name is not registered
    """
    if name not in FIXTURES:
        raise UnknownFixture(f"Unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name]()


def emit_fixtures(name: str, directory: Union[str, Path], indent: Optional[int] = 2) -> List[Path]:
    """Write the documents of a fixture into directory; output is byte-stable."""
    documents = fixture_documents(name)
    directory = Path(directory)
    paths = [write_json(document, directory / filename, indent) for filename, document in documents.items()]
    logger.info(f"Fixture {name}: wrote {len(paths)} files to {directory}")
    return paths
