import json
from pathlib import Path

import pytest

from ompmentor.kb.build import build_documents
from ompmentor.kb.catalog import list_entries
from ompmentor.matching.index import CompiledIndex

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


@pytest.fixture(scope="session")
def legacy_sample_path() -> Path:
    return GOLDEN / "legacy_sample.xml"


@pytest.fixture(scope="session")
def extended_path() -> Path:
    return GOLDEN / "extended.xml"


@pytest.fixture(scope="session")
def reason_phrases() -> dict:
    return json.loads((GOLDEN / "reason_phrases.json").read_text("utf-8"))


@pytest.fixture(scope="session")
def clean_snippets() -> list[Path]:
    return sorted((DATA / "clean_snippets").glob("*.c"))


@pytest.fixture(scope="session")
def entries():
    return list_entries()


@pytest.fixture(scope="session")
def documents():
    return build_documents()


@pytest.fixture(scope="session")
def indexes(documents):
    return {lang: CompiledIndex(doc) for lang, doc in documents.items()}


@pytest.fixture(scope="session")
def shipped_content_dir() -> Path:
    return Path(__file__).parent.parent / "src" / "ompmentor" / "content"
