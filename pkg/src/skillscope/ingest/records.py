"""Raw posting records and their normalized JobPosting form.

A raw record is a flat string->string map with the collector's seven keys
(job_title, company, description, posted_date, state, city, term). One
record per line as a JSON object is the fixture/export wire format.
"""

from __future__ import annotations

import datetime as dt
import hashlib
from dataclasses import dataclass, field

from ..terms import QueryTerm, parse_term
from .states import normalize_state

RAW_KEYS = ("job_title", "company", "description", "posted_date", "state", "city", "term")

REQUIRED_KEYS = ("job_title", "company", "description", "posted_date", "term")

DEDUP_DESCRIPTION_CHARS = 256


class ParseError(ValueError):
    """Base class for raw-record rejection."""


class MissingField(ParseError):
    """A required raw key is absent or blank."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"missing required field: {key}")


class BadDate(ParseError):
    """posted_date is not a parseable calendar date."""


@dataclass(frozen=True)
class JobPosting:
    """One advertisement observation, normalized and dedup-keyed."""

    job_title: str
    company: str
    description: str
    posted_date: dt.date
    state: str
    city: str
    term: QueryTerm
    observed_week: str
    dedup_key: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.dedup_key:
            object.__setattr__(self, "dedup_key", dedup_key(self))

    def as_raw(self) -> dict[str, str]:
        """Back to the wire-format field map (re-parseable by parse_posting)."""
        return {
            "job_title": self.job_title,
            "company": self.company,
            "description": self.description,
            "posted_date": self.posted_date.isoformat(),
            "state": self.state,
            "city": self.city,
            "term": self.term.value,
        }


def _squash(text: str) -> str:
    return " ".join(text.lower().split())


def dedup_key(p: JobPosting) -> str:
    """Stable digest identifying a posting within a sampling window.

    Covers (job_title, company, city, state, term, first 256 chars of the
    description), all lowercased and whitespace-collapsed, so trivial
    re-listings hash identically while any real field change does not.
    """
    parts = (
        _squash(p.job_title),
        _squash(p.company),
        _squash(p.city),
        p.state.lower(),
        p.term.slug,
        _squash(p.description)[:DEDUP_DESCRIPTION_CHARS],
    )
    blob = "\x1f".join(parts).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def parse_date(raw: str) -> dt.date:
    """Accept "M/D/YYYY" or ISO "YYYY-MM-DD"; reject everything else."""
    text = raw.strip()
    if "/" in text:
        pieces = text.split("/")
        if len(pieces) == 3:
            try:
                month, day, year = (int(x) for x in pieces)
                return dt.date(year, month, day)
            except ValueError:
                raise BadDate(f"not a valid M/D/YYYY date: {raw!r}") from None
        raise BadDate(f"not a valid M/D/YYYY date: {raw!r}")
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise BadDate(f"not a valid ISO date: {raw!r}") from None


def parse_posting(raw: dict[str, str], observed_week: str) -> JobPosting:
    """Normalize one raw record into a JobPosting.

    Raises MissingField (naming the key), BadDate, or UnknownTerm. state
    and city are optional in the raw map; state falls back to "??".
    """
    for key in REQUIRED_KEYS:
        value = raw.get(key)
        if value is None or not str(value).strip():
            raise MissingField(key)
    return JobPosting(
        job_title=str(raw["job_title"]).strip(),
        company=str(raw["company"]).strip(),
        description=str(raw["description"]).strip(),
        posted_date=parse_date(str(raw["posted_date"])),
        state=normalize_state(str(raw.get("state", ""))),
        city=str(raw.get("city", "")).strip(),
        term=parse_term(str(raw["term"])),
        observed_week=observed_week,
    )
