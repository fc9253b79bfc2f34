from pathlib import Path

import pytest

TESTS = Path(__file__).parent
CORPUS = TESTS / "corpus"
GOLDEN = TESTS / "golden"
CORPUS_SCRIPTS = sorted(CORPUS.glob("*.geo"))


@pytest.fixture
def corpus_dir():
    return CORPUS


@pytest.fixture
def golden_dir():
    return GOLDEN
