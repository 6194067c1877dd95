from pathlib import Path

import pytest

from ontoforge.owl_ingest import OwlDocument, parse_owl
from ontoforge.pivot_model import PivotOntology, to_pivot

FIXTURES = Path(__file__).parent / "fixtures"
GOLDENS = Path(__file__).parent / "goldens"


@pytest.fixture(scope="session")
def diplomas_path() -> Path:
    return FIXTURES / "diplomas.owl"


@pytest.fixture(scope="session")
def diplomas_source(diplomas_path) -> str:
    return diplomas_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def diplomas_doc(diplomas_source) -> OwlDocument:
    doc = parse_owl(diplomas_source)
    assert isinstance(doc, OwlDocument)
    return doc


@pytest.fixture(scope="session")
def diplomas_pivot(diplomas_doc) -> PivotOntology:
    pivot = to_pivot(diplomas_doc)
    assert isinstance(pivot, PivotOntology)
    return pivot
