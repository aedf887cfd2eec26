import json
import sqlite3
import threading

import pytest

from skillscope.extract import ExtractionResult
from skillscope.ingest.records import parse_posting
from skillscope.store import SCHEMA_VERSION, Store, StoreError, UnknownPosting

from helpers import raw_record, store_with


def posting(**overrides):
    return parse_posting(raw_record("generic description", **overrides), "2020-W20")


# --- lifecycle and schema ----------------------------------------------------

def test_opens_fresh_file_with_schema(tmp_path):
    path = tmp_path / "s.db"
    with Store(path) as store:
        meta = store.meta()
        assert meta["schema_version"] == str(SCHEMA_VERSION)
        assert meta["postings"] == 0
        assert meta["extracted"] == 0
        assert meta["active_lexicon_version"] is None
    with Store(path) as store:  # reopen sees the same database
        assert store.count_postings() == 0


def test_memory_store_needs_no_file():
    with Store() as store:
        assert store.count_postings() == 0


# --- inserting and dedup -----------------------------------------------------

def test_insert_and_count():
    with Store() as store:
        inserted, skipped = store.insert_postings([posting(), posting()])
        assert (inserted, skipped) == (2, 0)
        assert store.count_postings() == 2


def test_insert_empty_batch():
    with Store() as store:
        assert store.insert_postings([]) == (0, 0)


def test_duplicate_same_week_skipped():
    with Store() as store:
        p = posting(job_title="Data Analyst")
        store.insert_postings([p])
        inserted, skipped = store.insert_postings([p])
        assert (inserted, skipped) == (0, 1)
        assert store.count_postings() == 1


def test_duplicate_other_week_is_new_row():
    raw = raw_record("same ad text", job_title="Data Analyst")
    with Store() as store:
        store.insert_postings([parse_posting(raw, "2020-W20")])
        inserted, _ = store.insert_postings([parse_posting(raw, "2020-W21")])
        assert inserted == 1
        assert store.count_postings() == 2


def test_posted_week_derived_from_posted_date():
    with Store() as store:
        store.insert_postings([posting(posted_date="4/25/2020")])
        row = next(store.iter_postings())
        assert row["posted_date"] == "2020-04-25"
        assert row["posted_week"] == "2020-W17"


def test_insert_batch_with_internal_duplicates():
    p = posting(job_title="Repeated")
    with Store() as store:
        inserted, skipped = store.insert_postings([p, p, p])
        assert (inserted, skipped) == (1, 2)


# --- filtering ----------------------------------------------------------------

@pytest.fixture
def mixed_store():
    records = [
        raw_record("a", term="data analyst", state="CA", posted_date="2020-04-21",
                   company="Acme"),
        raw_record("b", term="data analyst", state="TX", posted_date="2020-04-28",
                   company="Globex"),
        raw_record("c", term="data scientist", state="CA", posted_date="2020-05-05",
                   company="Acme"),
        raw_record("d", term="machine learning engineer", state="WA",
                   posted_date="2020-05-12", company="Initech"),
    ]
    with store_with(records) as store:
        yield store


def test_count_filters(mixed_store):
    s = mixed_store
    assert s.count_postings() == 4
    assert s.count_postings(terms=("data_analyst",)) == 2
    assert s.count_postings(terms=("data_analyst", "data_scientist")) == 3
    assert s.count_postings(state="CA") == 2
    assert s.count_postings(company="acme") == 2  # company match ignores case
    assert s.count_postings(date_from="2020-04-25") == 3
    assert s.count_postings(date_to="2020-04-30") == 2
    assert s.count_postings(date_from="2020-04-25", date_to="2020-05-06") == 2
    assert s.count_postings(terms=("data_analyst",), state="TX") == 1


def test_group_counts(mixed_store):
    by_state = dict(mixed_store.group_counts("state"))
    assert by_state == {"CA": 2, "TX": 1, "WA": 1}
    by_week = dict(mixed_store.group_counts("posted_week"))
    assert by_week == {"2020-W17": 1, "2020-W18": 1, "2020-W19": 1, "2020-W20": 1}
    with pytest.raises(ValueError):
        mixed_store.group_counts("description")  # not an aggregation column


def test_date_span(mixed_store):
    assert mixed_store.date_span() == ("2020-04-21", "2020-05-12")
    assert mixed_store.date_span(terms=("data_analyst",)) == (
        "2020-04-21", "2020-04-28",
    )
    with Store() as empty:
        assert empty.date_span() is None


# --- skills and extraction bookkeeping ----------------------------------------

def write_skills(store, pid, skills, version="v1" * 22):
    store.write_extractions(
        [ExtractionResult(posting_id=pid, skills=frozenset(skills),
                          lexicon_version=version)]
    )


def test_write_and_read_skills(mixed_store):
    ids = [row["id"] for row in mixed_store.iter_postings()]
    write_skills(mixed_store, ids[0], {"python", "sql"})
    write_skills(mixed_store, ids[1], {"excel"})
    assert mixed_store.known_skills() == {"python", "sql", "excel"}
    counts = dict(mixed_store.skill_counts())
    assert counts == {"python": 1, "sql": 1, "excel": 1}


def test_rewrite_replaces_skill_set(mixed_store):
    pid = next(mixed_store.iter_postings())["id"]
    write_skills(mixed_store, pid, {"python", "sql"})
    write_skills(mixed_store, pid, {"r"}, version="v2" * 22)
    rows = [
        (row_id, skill)
        for row_id, skill in mixed_store._conn.execute(
            "SELECT posting_id, skill FROM skills WHERE posting_id = ?", (pid,)
        )
    ]
    assert rows == [(pid, "r")]


def test_write_extraction_for_missing_posting(mixed_store):
    with pytest.raises(UnknownPosting):
        write_skills(mixed_store, 999_999, {"python"})


def test_unextracted_postings_version_awareness(mixed_store):
    pending = list(mixed_store.unextracted_postings("v1" * 22))
    assert len(pending) == 4
    for pid, _desc in pending[:2]:
        write_skills(mixed_store, pid, {"python"})
    assert len(list(mixed_store.unextracted_postings("v1" * 22))) == 2
    # a different lexicon version makes everything pending again
    assert len(list(mixed_store.unextracted_postings("v9" * 22))) == 4
    # force ignores bookkeeping entirely
    assert len(list(mixed_store.unextracted_postings("v1" * 22, force=True))) == 4


def test_skill_counts_by_week(mixed_store):
    ids = [row["id"] for row in mixed_store.iter_postings()]
    write_skills(mixed_store, ids[0], {"python"})  # W17
    write_skills(mixed_store, ids[1], {"python"})  # W18
    rows = set(mixed_store.skill_counts(skills=["python"], by_week=True))
    assert rows == {("python", "2020-W17", 1), ("python", "2020-W18", 1)}


def test_valid_skills_prefers_lexicon_vocabulary(mixed_store):
    pid = next(mixed_store.iter_postings())["id"]
    write_skills(mixed_store, pid, {"python"})
    # before any vocabulary write, observed skills stand in
    assert mixed_store.valid_skills() == {"python"}
    mixed_store.set_active_lexicon("v1" * 22, ["python", "sql", "tableau"])
    assert mixed_store.valid_skills() == {"python", "sql", "tableau"}
    assert mixed_store.active_lexicon_version() == "v1" * 22


# --- snapshot isolation --------------------------------------------------------

def test_snapshot_does_not_see_later_writes(tmp_path):
    with Store(tmp_path / "s.db") as store:
        store.insert_postings([posting()])
        with store.snapshot() as conn:
            before = store.count_postings(conn=conn)
            store.insert_postings([posting(job_title="Late Arrival")])
            assert store.count_postings(conn=conn) == before
        assert store.count_postings() == 2


def test_concurrent_writers_serialize(tmp_path):
    with Store(tmp_path / "s.db") as store:
        errors = []

        def write(i):
            try:
                store.insert_postings([posting(job_title=f"T{i}")])
            except Exception as exc:  # pragma: no cover - failure reporting
                errors.append(exc)

        threads = [threading.Thread(target=write, args=(i,)) for i in range(16)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert errors == []
        assert store.count_postings() == 16


# --- export and integrity -------------------------------------------------------

def test_export_roundtrip(tmp_path, mixed_store):
    pid = next(mixed_store.iter_postings())["id"]
    write_skills(mixed_store, pid, {"python"})
    out = tmp_path / "dump.jsonl"
    count = mixed_store.export_jsonl(out)
    assert count == 4

    lines = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(lines) == 4
    assert lines[0]["skills"] == ["python"]

    with Store() as again:
        parsed = [parse_posting(r, observed_week=r["observed_week"]) for r in lines]
        inserted, skipped = again.insert_postings(parsed)
        assert (inserted, skipped) == (4, 0)
        original = {row["dedup_key"] for row in mixed_store.iter_postings()}
        copied = {row["dedup_key"] for row in again.iter_postings()}
        assert original == copied


def test_export_respects_filters(tmp_path, mixed_store):
    out = tmp_path / "subset.jsonl"
    count = mixed_store.export_jsonl(out, terms=("data_analyst",))
    assert count == 2


def test_check_clean_store(mixed_store):
    assert mixed_store.check() == []


def test_check_reports_orphans_and_bad_labels(tmp_path):
    with Store(tmp_path / "s.db") as store:
        store.insert_postings([posting()])
        # vandalize directly, bypassing the API
        store._conn.execute("PRAGMA foreign_keys = OFF")
        store._conn.execute(
            "INSERT INTO skills (posting_id, skill) VALUES (4242, 'python')"
        )
        store._conn.execute(
            "UPDATE postings SET posted_week = 'week-soup', state = 'ZZ'"
        )
        store._conn.commit()
        problems = store.check()
    assert any("4242" in p or "missing postings" in p for p in problems)
    assert any("week-soup" in p for p in problems)
    assert any("'ZZ'" in p for p in problems)


def test_store_error_wraps_sqlite_failures(tmp_path):
    store = Store(tmp_path / "s.db")
    store._conn.close()
    with pytest.raises(StoreError):
        store.count_postings()
