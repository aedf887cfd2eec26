"""Aggregations over stored postings and their extracted skills.

Counts are distinct postings, never raw mention counts: a skill showing
up five times in one ad still counts once. Weekly outputs are dense —
every calendar week touched by the window appears, zero-filled, so
consumers can plot without reindexing. Ties everywhere break by count
descending, then label ascending.

Time series bucket by posted_date (the advertised date drives every
user-facing chart); observed_week exists for operational bookkeeping.
"""

from __future__ import annotations

import datetime as dt
import sqlite3
from typing import Sequence

from ..store.db import Store
from ..weeks import weeks_between
from .filters import Filter


class UnknownSkill(ValueError):
    """Requested skills outside the active lexicon's vocabulary."""

    def __init__(self, skills: Sequence[str]):
        self.skills = sorted(skills)
        super().__init__("unknown skills: " + ", ".join(self.skills))


def _week_axis(
    store: Store,
    flt: Filter,
    conn: sqlite3.Connection | None,
) -> list[str]:
    start, end = flt.date_from, flt.date_to
    if start is None or end is None:
        span = store.date_span(
            terms=tuple(t.slug for t in flt.terms), conn=conn
        )
        if span is None:
            return []
        start = start or dt.date.fromisoformat(span[0])
        end = end or dt.date.fromisoformat(span[1])
    return weeks_between(start, end)


def top_skills(
    store: Store,
    flt: Filter = Filter(),
    n: int = 20,
    conn: sqlite3.Connection | None = None,
) -> list[dict]:
    """The n highest document-frequency skills under the filter."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = store.skill_counts(conn=conn, **flt.store_kwargs())
    rows.sort(key=lambda r: (-r[1], r[0]))
    return [{"skill": skill, "count": count} for skill, count in rows[:n]]


def weekly_counts(
    store: Store,
    flt: Filter = Filter(),
    conn: sqlite3.Connection | None = None,
) -> list[dict]:
    """Postings per ISO week across the window, zero-filled."""
    counts = dict(store.group_counts("posted_week", conn=conn, **flt.store_kwargs()))
    return [
        {"week": week, "count": counts.get(week, 0)}
        for week in _week_axis(store, flt, conn)
    ]


def state_counts(
    store: Store,
    flt: Filter = Filter(),
    conn: sqlite3.Connection | None = None,
) -> list[dict]:
    """Postings per state, highest first; '??' buckets the unresolvable."""
    rows = store.group_counts("state", conn=conn, **flt.store_kwargs())
    rows.sort(key=lambda r: (-r[1], r[0]))
    return [{"state": state, "count": count} for state, count in rows]


def company_counts(
    store: Store,
    flt: Filter = Filter(),
    n: int = 20,
    conn: sqlite3.Connection | None = None,
) -> list[dict]:
    """The n companies with the most postings in scope (verbatim names)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = store.group_counts("company", conn=conn, **flt.store_kwargs())
    rows.sort(key=lambda r: (-r[1], r[0]))
    return [{"company": company, "count": count} for company, count in rows[:n]]


def skill_timeseries(
    store: Store,
    skills: Sequence[str],
    flt: Filter = Filter(),
    conn: sqlite3.Connection | None = None,
) -> dict[str, list[dict]]:
    """Per-skill weekly posting counts on one shared, zero-filled axis.

    Skills must belong to the active lexicon's vocabulary (a known skill
    nobody mentions yields an all-zero series); offenders are reported
    together in one UnknownSkill. Series are independent: a posting
    mentioning two requested skills counts in both.
    """
    if not skills:
        raise ValueError("at least one skill required")
    requested = list(dict.fromkeys(skills))  # de-dupe, keep order
    vocabulary = store.valid_skills(conn=conn)
    missing = [s for s in requested if s not in vocabulary]
    if missing:
        raise UnknownSkill(missing)
    axis = _week_axis(store, flt, conn)
    by_skill: dict[str, dict[str, int]] = {s: {} for s in requested}
    for skill, week, count in store.skill_counts(
        skills=requested, by_week=True, conn=conn, **flt.store_kwargs()
    ):
        by_skill[skill][week] = count
    return {
        skill: [
            {"week": week, "count": by_skill[skill].get(week, 0)} for week in axis
        ]
        for skill in requested
    }
