import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
WORDNET_MINI = DATA_DIR / "wordnet_mini"
MINI_CORPUS = DATA_DIR / "mini_corpus"
REFERENCE_CLASSES = DATA_DIR / "reference" / "insurance_classes.txt"

sys.path.insert(0, str(REPO_ROOT / "src"))


@pytest.fixture(scope="session")
def wordnet_db():
    from ontoforge.wordnet import load_wordnet

    return load_wordnet(WORDNET_MINI)


@pytest.fixture(scope="session")
def tagger():
    from ontoforge.nlp import default_tagger

    return default_tagger()


@pytest.fixture()
def tag_doc(tagger):
    """Build a TaggedDocument from raw text with the default tagger."""
    from ontoforge.nlp import TaggedDocument, tag_text

    def build(text, doc_id="doc"):
        return TaggedDocument(doc_id=doc_id, sentences=tuple(tag_text(text, tagger)))

    return build


@pytest.fixture()
def pretag_doc():
    """Build a TaggedDocument from surface/TAG lines (exact tag control)."""
    from ontoforge.nlp import TaggedDocument, parse_pretagged

    def build(text, doc_id="doc"):
        return TaggedDocument(doc_id=doc_id, sentences=tuple(parse_pretagged(text)))

    return build
