import pytest

from skillscope.extract import build_matcher, extract_batch, run_extraction
from skillscope.lexicon import LexiconEntry, SkillLexicon, compile_lexicon, content_digest
from skillscope.lexicon.tags import TagEntry

from helpers import raw_record, store_with
from oracle import naive_extract

LEX = compile_lexicon(
    [TagEntry(n, "unit") for n in ("python", "sql", "excel", "machine-learning")],
    aliases=[("machine-learning", "machine learning")],
)
MATCHER = build_matcher(LEX)


def test_batch_matches_per_document_oracle():
    docs = [
        (1, "python and sql daily"),
        (2, "Excel dashboards; machine-learning exposure a plus"),
        (3, "nothing relevant"),
    ]
    results = list(extract_batch(MATCHER, docs))
    assert [r.posting_id for r in results] == [1, 2, 3]
    for (pid, text), result in zip(docs, results):
        assert result.skills == frozenset(naive_extract(LEX, text))
        assert result.lexicon_version == LEX.version


def test_batch_parallel_equals_serial():
    docs = [(i, f"python doc {i}" if i % 3 else "sql only") for i in range(200)]
    serial = list(extract_batch(MATCHER, docs, workers=1))
    threaded = list(extract_batch(MATCHER, iter(docs), workers=4))
    assert serial == threaded


def test_batch_rejects_bad_worker_count():
    with pytest.raises(ValueError):
        list(extract_batch(MATCHER, [], workers=0))


def store_with_three():
    return store_with(
        [
            raw_record("python and sql work"),
            raw_record("excel reporting"),
            raw_record("filing paperwork"),
        ]
    )


def test_run_extraction_writes_all_rows():
    with store_with_three() as store:
        summary = run_extraction(store, MATCHER)
        assert summary.processed == 3
        assert summary.skipped == 0
        assert summary.skills_written == 3  # python, sql, excel
        assert summary.lexicon_version == LEX.version
        assert store.known_skills() == {"python", "sql", "excel"}
        assert store.active_lexicon_version() == LEX.version


def test_run_extraction_is_idempotent_per_version():
    with store_with_three() as store:
        run_extraction(store, MATCHER)
        again = run_extraction(store, MATCHER)
        assert again.processed == 0
        assert again.skipped == 3
        assert again.skills_written == 0


def test_run_extraction_force_reprocesses():
    with store_with_three() as store:
        run_extraction(store, MATCHER)
        forced = run_extraction(store, MATCHER, force=True)
        assert forced.processed == 3
        # same version, same skills: row contents unchanged
        assert store.known_skills() == {"python", "sql", "excel"}


def test_new_lexicon_version_triggers_full_reextraction():
    with store_with_three() as store:
        run_extraction(store, MATCHER)

        grown = compile_lexicon(
            [TagEntry(n, "unit") for n in ("python", "sql", "excel", "paperwork")]
        )
        assert grown.version != LEX.version
        summary = run_extraction(store, build_matcher(grown))
        assert summary.processed == 3
        assert "paperwork" in store.known_skills()
        assert store.active_lexicon_version() == grown.version


def test_run_extraction_since_week_scopes_processing():
    records_w17 = [raw_record("python here", posted_date="2020-04-21")]
    records_w18 = [raw_record("sql there", posted_date="2020-04-28")]
    with store_with(records_w17, week="2020-W17") as store:
        from skillscope.ingest.records import parse_posting

        store.insert_postings(
            [parse_posting(r, observed_week="2020-W18") for r in records_w18]
        )
        summary = run_extraction(store, MATCHER, since_week="2020-W18")
        assert summary.processed == 1
        assert store.known_skills() == {"sql"}


def test_run_extraction_small_batches_equal_one_big_batch():
    records = [raw_record(f"python variant {i}") for i in range(25)]
    with store_with(records) as a, store_with(records) as b:
        run_extraction(a, MATCHER, batch_size=4)
        run_extraction(b, MATCHER, batch_size=500)
        assert a.known_skills() == b.known_skills()
        assert a.count_postings() == b.count_postings()
