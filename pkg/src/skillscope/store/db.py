"""Embedded posting store.

Single sqlite file in WAL mode: one serialized writer, any number of
readers, each read transaction seeing a consistent snapshot. Postings are
deduplicated per observation week by a UNIQUE(dedup_key, observed_week)
constraint, so re-running an ingest window is idempotent while the same
ad seen in a later week still counts again.

Skills are stored as (posting_id, skill) rows reflecting the most recent
extraction of each posting; the extractions table remembers under which
lexicon version that happened, which is what makes re-extraction
version-aware.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from ..ingest.records import JobPosting
from ..ingest.states import VALID_STATES
from ..terms import UnknownTerm, parse_term
from ..weeks import parse_week, week_of

SCHEMA_VERSION = 1

_SCHEMA = """
CREATE TABLE IF NOT EXISTS meta (
    key   TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS postings (
    id            INTEGER PRIMARY KEY,
    job_title     TEXT NOT NULL,
    company       TEXT NOT NULL,
    description   TEXT NOT NULL,
    posted_date   TEXT NOT NULL,
    posted_week   TEXT NOT NULL,
    state         TEXT NOT NULL,
    city          TEXT NOT NULL,
    term          TEXT NOT NULL,
    observed_week TEXT NOT NULL,
    dedup_key     TEXT NOT NULL,
    UNIQUE (dedup_key, observed_week)
);
CREATE INDEX IF NOT EXISTS idx_postings_term_date ON postings (term, posted_date);
CREATE INDEX IF NOT EXISTS idx_postings_week  ON postings (posted_week);
CREATE INDEX IF NOT EXISTS idx_postings_state ON postings (state);
CREATE TABLE IF NOT EXISTS extractions (
    posting_id      INTEGER PRIMARY KEY REFERENCES postings (id),
    lexicon_version TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS skills (
    posting_id INTEGER NOT NULL REFERENCES postings (id),
    skill      TEXT NOT NULL,
    PRIMARY KEY (posting_id, skill)
);
CREATE INDEX IF NOT EXISTS idx_skills_skill ON skills (skill);
CREATE TABLE IF NOT EXISTS lexicon_skills (
    skill TEXT PRIMARY KEY
);
"""


class StoreError(RuntimeError):
    """Wraps storage failures (I/O, corruption, constraint breakage)."""


class UnknownPosting(StoreError):
    def __init__(self, posting_id: int):
        super().__init__(f"no posting with id {posting_id}")
        self.posting_id = posting_id


@contextmanager
def _guard() -> Iterator[None]:
    try:
        yield
    except sqlite3.Error as exc:
        raise StoreError(str(exc)) from exc


def _filter_sql(
    terms: Sequence[str],
    date_from: str | None,
    date_to: str | None,
    state: str | None,
    company: str | None,
) -> tuple[str, list]:
    # dates are stored as ISO text, so string order is date order
    clauses, params = [], []
    if terms:
        clauses.append(f"p.term IN ({','.join('?' * len(terms))})")
        params.extend(terms)
    if date_from is not None:
        clauses.append("p.posted_date >= ?")
        params.append(date_from)
    if date_to is not None:
        clauses.append("p.posted_date <= ?")
        params.append(date_to)
    if state is not None:
        clauses.append("p.state = ?")
        params.append(state)
    if company is not None:
        clauses.append("p.company = ? COLLATE NOCASE")
        params.append(company)
    where = (" WHERE " + " AND ".join(clauses)) if clauses else ""
    return where, params


class Store:
    """File-backed posting/skill store. Use ":memory:" for throwaways."""

    def __init__(self, path: str | Path = ":memory:"):
        self.path = str(path)
        with _guard():
            self._conn = sqlite3.connect(self.path, check_same_thread=False)
            self._conn.execute("PRAGMA journal_mode = WAL")
            self._conn.execute("PRAGMA synchronous = NORMAL")
            self._conn.execute("PRAGMA foreign_keys = ON")
            self._conn.executescript(_SCHEMA)
            self._conn.execute(
                "INSERT OR IGNORE INTO meta (key, value) VALUES (?, ?)",
                ("schema_version", str(SCHEMA_VERSION)),
            )
            self._conn.commit()
        self._write_lock = threading.Lock()

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- reading ---------------------------------------------------------

    @contextmanager
    def snapshot(self) -> Iterator[sqlite3.Connection]:
        """A read connection pinned to one consistent view of the store.

        Writes committed while the snapshot is open stay invisible to it.
        In-memory stores share the writer connection instead (sqlite
        :memory: databases are per-connection), losing isolation but not
        correctness for single-threaded use.
        """
        if self.path == ":memory:":
            yield self._conn
            return
        with _guard():
            conn = sqlite3.connect(self.path, check_same_thread=False)
        try:
            with _guard():
                conn.execute("BEGIN")
                conn.execute("SELECT COUNT(*) FROM meta")  # pin the snapshot
            yield conn
        finally:
            conn.close()

    def _read(self, conn: sqlite3.Connection | None) -> sqlite3.Connection:
        return conn if conn is not None else self._conn

    def meta(self) -> dict:
        with _guard():
            rows = self._conn.execute("SELECT key, value FROM meta").fetchall()
            info = dict(rows)
            info["postings"] = self._conn.execute(
                "SELECT COUNT(*) FROM postings"
            ).fetchone()[0]
            info["extracted"] = self._conn.execute(
                "SELECT COUNT(*) FROM extractions"
            ).fetchone()[0]
            info["skill_rows"] = self._conn.execute(
                "SELECT COUNT(*) FROM skills"
            ).fetchone()[0]
        info.setdefault("active_lexicon_version", None)
        return info

    def active_lexicon_version(self) -> str | None:
        with _guard():
            row = self._conn.execute(
                "SELECT value FROM meta WHERE key = 'active_lexicon_version'"
            ).fetchone()
        return row[0] if row else None

    def count_postings(
        self,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
        since_week: str | None = None,
        conn: sqlite3.Connection | None = None,
    ) -> int:
        where, params = _filter_sql(terms, date_from, date_to, state, company)
        if since_week is not None:
            where = (where + " AND " if where else " WHERE ") + "p.posted_week >= ?"
            params.append(since_week)
        with _guard():
            return self._read(conn).execute(
                "SELECT COUNT(*) FROM postings p" + where, params
            ).fetchone()[0]

    def iter_postings(
        self,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
        conn: sqlite3.Connection | None = None,
    ) -> Iterator[sqlite3.Row]:
        where, params = _filter_sql(terms, date_from, date_to, state, company)
        read = self._read(conn)
        read.row_factory = sqlite3.Row
        with _guard():
            cur = read.execute(
                "SELECT p.* FROM postings p" + where + " ORDER BY p.id", params
            )
            yield from cur

    def query_postings(
        self,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
        conn: sqlite3.Connection | None = None,
    ) -> Iterator[tuple[sqlite3.Row, frozenset[str]]]:
        """Matching rows paired with their extracted skill sets."""
        read = self._read(conn)
        with _guard():
            skills_by_posting: dict[int, set[str]] = {}
            for pid, skill in read.execute("SELECT posting_id, skill FROM skills"):
                skills_by_posting.setdefault(pid, set()).add(skill)
        for row in self.iter_postings(
            terms, date_from, date_to, state, company, conn=read
        ):
            yield row, frozenset(skills_by_posting.get(row["id"], ()))

    def date_span(
        self, terms: Sequence[str] = (), conn: sqlite3.Connection | None = None
    ) -> tuple[str, str] | None:
        """(min, max) posted_date present (ISO), or None when empty."""
        where, params = _filter_sql(terms, None, None, None, None)
        with _guard():
            row = self._read(conn).execute(
                "SELECT MIN(posted_date), MAX(posted_date) FROM postings p" + where,
                params,
            ).fetchone()
        if row is None or row[0] is None:
            return None
        return row[0], row[1]

    def known_skills(self, conn: sqlite3.Connection | None = None) -> set[str]:
        """Skills observed in at least one posting."""
        with _guard():
            rows = self._read(conn).execute(
                "SELECT DISTINCT skill FROM skills"
            ).fetchall()
        return {r[0] for r in rows}

    def valid_skills(self, conn: sqlite3.Connection | None = None) -> set[str]:
        """The active lexicon's vocabulary; observed skills as a fallback
        for stores populated before any extraction recorded it."""
        with _guard():
            rows = self._read(conn).execute(
                "SELECT skill FROM lexicon_skills"
            ).fetchall()
        return {r[0] for r in rows} if rows else self.known_skills(conn)

    # -- aggregation primitives (semantics live in analytics) -------------

    def group_counts(
        self,
        dimension: str,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
        conn: sqlite3.Connection | None = None,
    ) -> list[tuple[str, int]]:
        """Posting counts grouped by a posting column."""
        if dimension not in {"posted_week", "state", "company", "term"}:
            raise ValueError(f"cannot group postings by {dimension!r}")
        where, params = _filter_sql(terms, date_from, date_to, state, company)
        sql = (
            f"SELECT p.{dimension}, COUNT(*) FROM postings p"
            f"{where} GROUP BY p.{dimension}"
        )
        with _guard():
            return [
                (row[0], row[1])
                for row in self._read(conn).execute(sql, params).fetchall()
            ]

    def skill_counts(
        self,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
        skills: Sequence[str] | None = None,
        by_week: bool = False,
        conn: sqlite3.Connection | None = None,
    ) -> list[tuple]:
        """Distinct-posting counts per skill, optionally split by week.

        Rows are (skill, count) or (skill, posted_week, count).
        """
        where, params = _filter_sql(terms, date_from, date_to, state, company)
        if skills:
            clause = f"s.skill IN ({','.join('?' * len(skills))})"
            where = (where + " AND " if where else " WHERE ") + clause
            params = params + list(skills)
        select = "s.skill, p.posted_week, COUNT(*)" if by_week else "s.skill, COUNT(*)"
        group = "s.skill, p.posted_week" if by_week else "s.skill"
        sql = (
            f"SELECT {select} FROM skills s JOIN postings p ON p.id = s.posting_id"
            f"{where} GROUP BY {group}"
        )
        with _guard():
            return [tuple(r) for r in self._read(conn).execute(sql, params).fetchall()]

    # -- writing -----------------------------------------------------------

    def insert_postings(self, rows: Iterable[JobPosting]) -> tuple[int, int]:
        """Insert postings, ignoring per-week duplicates.

        Returns (inserted, skipped). Atomic: either the whole batch lands
        or none of it does.
        """
        payload = [
            (
                p.job_title, p.company, p.description, p.posted_date.isoformat(),
                week_of(p.posted_date), p.state, p.city, p.term.slug, p.observed_week,
                p.dedup_key,
            )
            for p in rows
        ]
        if not payload:
            return (0, 0)
        with self._write_lock, _guard():
            before = self._conn.total_changes
            self._conn.executemany(
                "INSERT OR IGNORE INTO postings (job_title, company, description,"
                " posted_date, posted_week, state, city, term, observed_week,"
                " dedup_key) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                payload,
            )
            inserted = self._conn.total_changes - before
            self._conn.commit()
        return inserted, len(payload) - inserted

    def unextracted_postings(
        self,
        lexicon_version: str,
        force: bool = False,
        since_week: str | None = None,
    ) -> Iterator[tuple[int, str]]:
        """(id, description) of postings needing extraction under a version."""
        clauses, params = [], []
        if not force:
            clauses.append(
                "id NOT IN (SELECT posting_id FROM extractions"
                " WHERE lexicon_version = ?)"
            )
            params.append(lexicon_version)
        if since_week is not None:
            clauses.append("posted_week >= ?")
            params.append(since_week)
        where = (" WHERE " + " AND ".join(clauses)) if clauses else ""
        sql = "SELECT id, description FROM postings" + where + " ORDER BY id"
        if self.path == ":memory:":
            with _guard():
                yield from self._conn.execute(sql, params).fetchall()
            return
        # stream from a dedicated reader so writes can interleave
        with _guard():
            conn = sqlite3.connect(self.path, check_same_thread=False)
        try:
            with _guard():
                yield from conn.execute(sql, params)
        finally:
            conn.close()

    def write_extractions(self, results: Iterable) -> int:
        """Record extraction results; returns skill rows written.

        Replaces any earlier skill set for each posting, so the skills
        table always mirrors exactly one extraction per posting.
        """
        written = 0
        with self._write_lock, _guard():
            for result in results:
                exists = self._conn.execute(
                    "SELECT 1 FROM postings WHERE id = ?", (result.posting_id,)
                ).fetchone()
                if exists is None:
                    self._conn.rollback()
                    raise UnknownPosting(result.posting_id)
                self._conn.execute(
                    "DELETE FROM skills WHERE posting_id = ?", (result.posting_id,)
                )
                self._conn.executemany(
                    "INSERT INTO skills (posting_id, skill) VALUES (?, ?)",
                    [(result.posting_id, s) for s in sorted(result.skills)],
                )
                self._conn.execute(
                    "INSERT INTO extractions (posting_id, lexicon_version)"
                    " VALUES (?, ?) ON CONFLICT (posting_id)"
                    " DO UPDATE SET lexicon_version = excluded.lexicon_version",
                    (result.posting_id, result.lexicon_version),
                )
                written += len(result.skills)
            self._conn.commit()
        return written

    def set_active_lexicon(self, version: str, canonicals: Iterable[str] = ()) -> None:
        """Record which lexicon the skills table reflects, and its vocabulary."""
        canonicals = list(canonicals)
        with self._write_lock, _guard():
            self._conn.execute(
                "INSERT INTO meta (key, value) VALUES ('active_lexicon_version', ?)"
                " ON CONFLICT (key) DO UPDATE SET value = excluded.value",
                (version,),
            )
            if canonicals:
                self._conn.execute("DELETE FROM lexicon_skills")
                self._conn.executemany(
                    "INSERT INTO lexicon_skills (skill) VALUES (?)",
                    [(c,) for c in canonicals],
                )
            self._conn.commit()

    # -- maintenance -------------------------------------------------------

    def export_jsonl(
        self,
        path: str | Path,
        terms: Sequence[str] = (),
        date_from: str | None = None,
        date_to: str | None = None,
    ) -> int:
        """Dump postings as ingestable JSON lines, with extracted skills.

        The extra keys (skills, observed_week) are ignored on re-ingest.
        """
        count = 0
        with self.snapshot() as conn, _guard(), open(path, "w") as out:
            for row, skills in self.query_postings(
                terms=terms, date_from=date_from, date_to=date_to, conn=conn
            ):
                record = {
                    "job_title": row["job_title"],
                    "company": row["company"],
                    "description": row["description"],
                    "posted_date": row["posted_date"],
                    "state": row["state"],
                    "city": row["city"],
                    "term": row["term"],
                    "observed_week": row["observed_week"],
                    "skills": sorted(skills),
                }
                out.write(json.dumps(record, sort_keys=True) + "\n")
                count += 1
        return count

    def check(self) -> list[str]:
        """Integrity scan; empty list means healthy."""
        problems: list[str] = []
        with _guard():
            conn = self._conn
            orphans = conn.execute(
                "SELECT COUNT(*) FROM skills s LEFT JOIN postings p"
                " ON p.id = s.posting_id WHERE p.id IS NULL"
            ).fetchone()[0]
            if orphans:
                problems.append(f"{orphans} skill rows reference missing postings")
            orphans = conn.execute(
                "SELECT COUNT(*) FROM extractions e LEFT JOIN postings p"
                " ON p.id = e.posting_id WHERE p.id IS NULL"
            ).fetchone()[0]
            if orphans:
                problems.append(
                    f"{orphans} extraction rows reference missing postings"
                )
            unextracted_skills = conn.execute(
                "SELECT COUNT(DISTINCT s.posting_id) FROM skills s"
                " LEFT JOIN extractions e ON e.posting_id = s.posting_id"
                " WHERE e.posting_id IS NULL"
            ).fetchone()[0]
            if unextracted_skills:
                problems.append(
                    f"{unextracted_skills} postings have skills but no"
                    " extraction record"
                )
            for week_col in ("posted_week", "observed_week"):
                for (value,) in conn.execute(
                    f"SELECT DISTINCT {week_col} FROM postings"
                ):
                    try:
                        parse_week(value)
                    except ValueError:
                        problems.append(f"bad {week_col} label {value!r}")
            for (value,) in conn.execute("SELECT DISTINCT state FROM postings"):
                if value not in VALID_STATES:
                    problems.append(f"bad state code {value!r}")
            for (value,) in conn.execute("SELECT DISTINCT term FROM postings"):
                try:
                    parse_term(value)
                except UnknownTerm:
                    problems.append(f"bad query term {value!r}")
        return problems
