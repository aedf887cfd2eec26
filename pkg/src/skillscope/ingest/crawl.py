"""Crawl orchestration: fetch, parse, dedupe, store, tally.

Fetching and parsing run concurrently across terms (bounded pool); all
sink writes are funneled through the calling thread so storage sees one
serialized writer.
"""

from __future__ import annotations

import datetime as dt
import queue
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Protocol, Sequence

from ..terms import QueryTerm, UnknownTerm
from .records import JobPosting, ParseError, parse_posting
from .sources import SourceAdapter

DEFAULT_PARALLELISM = 3


class SinkError(RuntimeError):
    """A storage write failed; the crawl aborts with a partial report."""


class PostingSink(Protocol):
    def insert_postings(self, rows: Sequence[JobPosting]) -> tuple[int, int]:
        """Store rows, returning (inserted, duplicates_skipped)."""
        ...


@dataclass
class TermTally:
    fetched: int = 0
    parsed_ok: int = 0
    parse_failed: int = 0
    duplicates_skipped: int = 0
    stored: int = 0


@dataclass
class CrawlReport:
    """Per-term ingest accounting for one crawl run."""

    source: str
    window: str
    terms: dict[str, TermTally] = field(default_factory=dict)
    started_at: str = ""
    finished_at: str = ""
    error: str | None = None

    def tally(self, term: QueryTerm) -> TermTally:
        return self.terms.setdefault(term.slug, TermTally())

    def total(self, field_name: str) -> int:
        return sum(getattr(t, field_name) for t in self.terms.values())

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "window": self.window,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "error": self.error,
            "terms": {slug: vars(t).copy() for slug, t in sorted(self.terms.items())},
            "totals": {
                name: self.total(name)
                for name in ("fetched", "parsed_ok", "parse_failed", "duplicates_skipped", "stored")
            },
        }


def _now() -> str:
    return dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds")


def run_crawl(
    source: SourceAdapter,
    terms: Sequence[QueryTerm],
    sink: PostingSink,
    window: str,
    parallelism: int = DEFAULT_PARALLELISM,
) -> CrawlReport:
    """Ingest every record the source yields for the given terms.

    Parse failures are counted, not fatal. Rows whose dedup key was already
    stored in the same observed week are skipped. Raises SourceUnavailable
    (from the adapter) if a term's stream dies before its first batch; a
    sink failure aborts the crawl and returns the partial report with its
    error field set.
    """
    if not terms:
        raise ValueError("run_crawl needs at least one query term")
    report = CrawlReport(source=getattr(source, "name", str(source)), window=window)
    report.started_at = _now()
    for term in terms:
        report.tally(term)

    batches: queue.Queue = queue.Queue(maxsize=16)
    DONE = object()
    stop = threading.Event()

    def produce(term: QueryTerm) -> None:
        try:
            for batch in source.fetch(term):
                if stop.is_set():
                    break
                parsed: list[JobPosting] = []
                failed = 0
                for raw in batch:
                    try:
                        parsed.append(parse_posting(raw, observed_week=window))
                    except (ParseError, UnknownTerm):
                        failed += 1
                batches.put((term, len(batch), parsed, failed, None))
        except Exception as exc:
            batches.put((term, 0, [], 0, exc))
        finally:
            batches.put(DONE)

    workers = max(1, min(parallelism, len(terms)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for term in terms:
            pool.submit(produce, term)
        open_streams = len(terms)
        failure: BaseException | None = None
        while open_streams:
            item = batches.get()
            if item is DONE:
                open_streams -= 1
                continue
            term, fetched, parsed, failed, exc = item
            if exc is not None:
                failure = exc
                stop.set()
                continue
            tally = report.tally(term)
            tally.fetched += fetched
            tally.parsed_ok += len(parsed)
            tally.parse_failed += failed
            if parsed and not stop.is_set():
                try:
                    inserted, skipped = sink.insert_postings(parsed)
                except Exception as write_exc:
                    report.error = f"sink write failed: {write_exc}"
                    stop.set()
                    continue
                tally.stored += inserted
                tally.duplicates_skipped += skipped

    report.finished_at = _now()
    if failure is not None:
        raise failure
    return report


@dataclass
class Schedule:
    """Periodic trigger state for the weekly sampling loop."""

    anchor: dt.datetime
    period: dt.timedelta = dt.timedelta(days=7)

    def __post_init__(self):
        if self.period <= dt.timedelta(0):
            raise ValueError("schedule period must be positive")


def schedule_tick(schedule: Schedule, now: dt.datetime) -> bool:
    """True (and the anchor advances to `now`) iff a period has elapsed.

    The boundary is inclusive: now - anchor == period triggers.
    """
    if now - schedule.anchor >= schedule.period:
        schedule.anchor = now
        return True
    return False


def daemon_loop(
    run_once,
    period: dt.timedelta,
    clock=None,
    sleep=None,
    poll_seconds: float = 60.0,
    max_runs: int | None = None,
) -> int:
    """Fire run_once immediately, then once per period, forever.

    clock and sleep are injectable so the loop is testable without real
    time passing. Returns the completed run count once max_runs is hit
    (never, when max_runs is None).
    """
    if clock is None:
        clock = lambda: dt.datetime.now(dt.timezone.utc)  # noqa: E731
    if sleep is None:
        sleep = time.sleep
    schedule = Schedule(anchor=clock() - period, period=period)
    runs = 0
    while True:
        if schedule_tick(schedule, clock()):
            run_once()
            runs += 1
        if max_runs is not None and runs >= max_runs:
            return runs
        sleep(poll_seconds)
