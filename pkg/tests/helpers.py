"""Shared builders for test corpora.

Small hand-planted stores are built through parse_posting + insert +
extraction so they exercise the same write path production uses.
"""

from __future__ import annotations

import itertools

from skillscope.extract import run_extraction
from skillscope.ingest.records import parse_posting
from skillscope.ingest.synth import planted_count
from skillscope.store import Store

_counter = itertools.count(1)

# ---------------------------------------------------------------------------
# The seeded benchmark corpus: three tracks x 500 postings with planted
# document frequencies. Every planted surface is a single-word canonical in
# the packaged lexicon and none contains another at a valid boundary, so the
# ground-truth counts below are exact, not approximate.

CORPUS_SEED = 20
CORPUS_WINDOW = "2020-W44"
CORPUS_SIZE = 500  # per track

PLANT_SKILLS = (
    "python", "sql", "java", "excel", "tableau", "hadoop", "spark", "kafka",
    "aws", "azure", "linux", "docker", "kubernetes", "terraform", "git",
    "jira", "airflow", "snowflake", "postgresql", "mysql", "mongodb", "redis",
    "scala", "matlab", "sas", "sap", "etl", "statistics", "forecasting",
    "mathematics",
)

CORPUS_STATES = {
    "CA": 8.0, "TX": 5.0, "NY": 5.0, "WA": 4.0, "VA": 4.0, "IL": 3.0,
    "MA": 3.0, "FL": 2.0, "PA": 2.0, "MD": 2.0, "NC": 2.0, "GA": 1.0,
    "??": 1.0,
}

CORPUS_DATES = ("2020-04-20", "2020-10-18")  # W17 through W42, 26 weeks


def _counts(order: list[str], start: int) -> dict[str, int]:
    return {skill: start - 15 * i for i, skill in enumerate(order)}


def corpus_truth() -> dict[str, dict[str, int]]:
    """Planted per-track document counts, keyed by term slug then skill."""
    skills = list(PLANT_SKILLS)
    rotated = skills[11:] + skills[:11]
    return {
        "data_scientist": _counts(skills, 460),
        "data_analyst": _counts(rotated, 470),
        "ml_engineer": _counts(list(reversed(skills)), 450),
    }


def corpus_profile_dict() -> dict:
    """SynthProfile JSON shape realizing corpus_truth() exactly."""
    terms = {
        slug: {
            "count": CORPUS_SIZE,
            "skills": {s: c / CORPUS_SIZE for s, c in wanted.items()},
        }
        for slug, wanted in corpus_truth().items()
    }
    # The frequency round trip must be lossless or the truth table lies.
    for slug, wanted in corpus_truth().items():
        for skill, c in wanted.items():
            assert planted_count(terms[slug]["skills"][skill], CORPUS_SIZE) == c
    return {
        "terms": terms,
        "date_from": CORPUS_DATES[0],
        "date_to": CORPUS_DATES[1],
        "states": CORPUS_STATES,
    }


def raw_record(
    description: str,
    *,
    term: str = "data analyst",
    posted_date: str = "2020-04-20",
    state: str = "CA",
    city: str = "Springfield",
    company: str = "Acme",
    job_title: str | None = None,
) -> dict[str, str]:
    """One wire-format record; job_title defaults to a unique string so
    hand-planted rows never collide on dedup_key."""
    return {
        "job_title": job_title or f"Analyst #{next(_counter)}",
        "company": company,
        "description": description,
        "posted_date": posted_date,
        "state": state,
        "city": city,
        "term": term,
    }


def store_with(records, matcher=None, week: str = "2020-W20", path=":memory:") -> Store:
    """Fresh store holding the given raw records, extracted when a matcher
    is supplied. Caller owns (and closes) the store."""
    store = Store(path)
    postings = [parse_posting(r, observed_week=week) for r in records]
    inserted, skipped = store.insert_postings(postings)
    assert skipped == 0, "helper corpora must not self-collide"
    assert inserted == len(postings)
    if matcher is not None:
        run_extraction(store, matcher)
    return store
