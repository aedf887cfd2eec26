from __future__ import annotations

import pytest

from skillscope.extract import build_matcher, run_extraction
from skillscope.ingest.crawl import run_crawl
from skillscope.ingest.synth import SynthProfile, SyntheticSource
from skillscope.lexicon import build_reference_lexicon
from skillscope.store import Store
from skillscope.terms import ALL_TERMS

from helpers import CORPUS_SEED, CORPUS_SIZE, CORPUS_WINDOW, corpus_profile_dict


@pytest.fixture(scope="session")
def reference_lexicon():
    return build_reference_lexicon()


@pytest.fixture(scope="session")
def reference_matcher(reference_lexicon):
    return build_matcher(reference_lexicon)


@pytest.fixture(scope="session")
def corpus_db_path(tmp_path_factory, reference_matcher):
    """Seeded benchmark corpus on disk: 3 tracks x 500 postings, extracted.

    Session-shared and treated as read-only by every test that touches it.
    """
    path = tmp_path_factory.mktemp("corpus") / "corpus.db"
    profile = SynthProfile.from_dict(corpus_profile_dict())
    source = SyntheticSource(CORPUS_SEED, profile)
    with Store(path) as store:
        report = run_crawl(source, ALL_TERMS, store, window=CORPUS_WINDOW)
        assert report.error is None
        assert report.total("stored") == CORPUS_SIZE * len(ALL_TERMS)
        summary = run_extraction(store, reference_matcher)
        assert summary.processed == CORPUS_SIZE * len(ALL_TERMS)
    return path


@pytest.fixture(scope="session")
def corpus_store(corpus_db_path):
    with Store(corpus_db_path) as store:
        yield store
