"""Pluggable posting suppliers.

A source yields raw posting records for one query term at a time, in
batches, until exhausted. Fixture replay and the synthetic generator are
deterministic; the live HTTP adapter is best-effort and opt-in.
"""

from __future__ import annotations

import json
import time
from pathlib import Path
from typing import Iterator, Protocol

from ..terms import QueryTerm, UnknownTerm, parse_term

RawRecord = dict[str, str]
Batch = list[RawRecord]


class SourceUnavailable(RuntimeError):
    """The adapter failed before producing its first batch."""


class SourceAdapter(Protocol):
    """Behavioral contract every posting supplier satisfies."""

    name: str

    def fetch(self, term: QueryTerm) -> Iterator[Batch]:
        """Yield raw records for one query term, one batch at a time."""
        ...


class FixtureSource:
    """Replays raw records from a JSONL file, routed by their term field.

    Records whose term does not parse to any track cannot be routed; they
    are attached to the first term fetched so the crawl still counts them
    (they surface as parse failures downstream).
    """

    def __init__(self, path: str | Path, batch_size: int = 50):
        self.path = Path(path)
        self.name = f"fixture:{self.path}"
        self.batch_size = batch_size
        self._routed: dict[QueryTerm, list[RawRecord]] | None = None
        self._unrouted: list[RawRecord] = []
        self._unrouted_taken = False

    def _load(self) -> dict[QueryTerm, list[RawRecord]]:
        if self._routed is not None:
            return self._routed
        routed: dict[QueryTerm, list[RawRecord]] = {t: [] for t in QueryTerm}
        try:
            with open(self.path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    record = json.loads(line)
                    try:
                        routed[parse_term(str(record.get("term", "")))].append(record)
                    except UnknownTerm:
                        self._unrouted.append(record)
        except OSError as exc:
            raise SourceUnavailable(f"cannot read fixture {self.path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SourceUnavailable(f"fixture {self.path} is not valid JSONL: {exc}") from exc
        self._routed = routed
        return routed

    def fetch(self, term: QueryTerm) -> Iterator[Batch]:
        records = list(self._load()[term])
        if not self._unrouted_taken and self._unrouted:
            self._unrouted_taken = True
            records = records + self._unrouted
        for i in range(0, len(records), self.batch_size):
            yield records[i : i + self.batch_size]


DEFAULT_POLITENESS_DELAY = 2.0

USER_AGENT = "skillscope/0.1 (+self-hosted job-market sampler)"


class LiveSource:
    """Opt-in HTTP adapter skeleton with per-request politeness delay.

    Site-specific page fetching/parsing is intentionally not shipped: wire
    a `fetch_page` callable that takes (term, page_index) and returns a
    list of raw records, or None when the result set is exhausted.
    """

    def __init__(self, fetch_page, politeness_delay: float = DEFAULT_POLITENESS_DELAY,
                 max_pages: int = 50, name: str = "live"):
        if politeness_delay < 0:
            raise ValueError("politeness_delay must be >= 0")
        self.fetch_page = fetch_page
        self.politeness_delay = politeness_delay
        self.max_pages = max_pages
        self.name = name

    def fetch(self, term: QueryTerm) -> Iterator[Batch]:
        for page in range(self.max_pages):
            if page:
                time.sleep(self.politeness_delay)
            try:
                records = self.fetch_page(term, page)
            except Exception as exc:
                if page == 0:
                    raise SourceUnavailable(f"live fetch failed on first page: {exc}") from exc
                return
            if not records:
                return
            yield list(records)
