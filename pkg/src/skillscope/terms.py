"""The three query tracks every stored posting is tagged with."""

from __future__ import annotations

import enum


class UnknownTerm(ValueError):
    """Raised when a raw term string matches none of the three tracks."""


class QueryTerm(enum.Enum):
    """One of the three job-search queries the collector runs."""

    DATA_SCIENTIST = "data scientist"
    DATA_ANALYST = "data analyst"
    ML_ENGINEER = "machine learning engineer"

    @property
    def slug(self) -> str:
        """Identifier form used in URLs, CLI flags, and the store."""
        return self.name.lower()

    def __str__(self) -> str:
        return self.value


_SHORT = {
    "ds": QueryTerm.DATA_SCIENTIST,
    "da": QueryTerm.DATA_ANALYST,
    "mle": QueryTerm.ML_ENGINEER,
}


def parse_term(raw: str) -> QueryTerm:
    """Match a raw term string (display form, slug, or short code) to a track.

    Case-insensitive; surrounding whitespace ignored. Raises UnknownTerm
    for anything outside the closed three-value set.
    """
    key = " ".join(raw.strip().lower().split())
    for term in QueryTerm:
        if key in (term.value, term.slug):
            return term
    if key in _SHORT:
        return _SHORT[key]
    raise UnknownTerm(f"not a known query term: {raw!r}")


ALL_TERMS: tuple[QueryTerm, ...] = tuple(QueryTerm)
