"""Query filters shared by the aggregation functions, API, and CLI."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from ..ingest.states import VALID_STATES
from ..terms import QueryTerm, UnknownTerm, parse_term


class BadFilter(ValueError):
    """Invalid filter input; message names the offending parameter."""

    def __init__(self, parameter: str, message: str):
        super().__init__(f"{parameter}: {message}")
        self.parameter = parameter


@dataclass(frozen=True)
class Filter:
    """Posting scope, all parts optional and AND-combined.

    terms is a subset of the query tracks; empty means all of them.
    The date range is inclusive on both ends and applies to posted_date.
    """

    terms: tuple[QueryTerm, ...] = ()
    date_from: dt.date | None = None
    date_to: dt.date | None = None
    state: str | None = None
    company: str | None = None

    def __post_init__(self):
        if (
            self.date_from is not None
            and self.date_to is not None
            and self.date_from > self.date_to
        ):
            raise BadFilter(
                "from", f"{self.date_from} is after to={self.date_to}"
            )
        if self.state is not None and self.state not in VALID_STATES:
            raise BadFilter("state", f"unknown state code {self.state!r}")

    @classmethod
    def from_params(
        cls,
        term: str | None = None,
        date_from: str | None = None,
        date_to: str | None = None,
        state: str | None = None,
        company: str | None = None,
    ) -> "Filter":
        """Build from raw query-string values. Raises BadFilter."""
        terms: tuple[QueryTerm, ...] = ()
        if term not in (None, "", "all"):
            try:
                terms = (parse_term(term),)
            except UnknownTerm as exc:
                raise BadFilter("term", str(exc)) from exc
        dates = {}
        for name, raw in (("from", date_from), ("to", date_to)):
            if raw in (None, ""):
                dates[name] = None
                continue
            try:
                dates[name] = dt.date.fromisoformat(raw)
            except ValueError as exc:
                raise BadFilter(name, f"not an ISO date: {raw!r}") from exc
        state_code = state.strip().upper() if state else None
        return cls(
            terms=terms,
            date_from=dates["from"],
            date_to=dates["to"],
            state=state_code or None,
            company=(company or None),
        )

    def store_kwargs(self) -> dict:
        return {
            "terms": tuple(t.slug for t in self.terms),
            "date_from": self.date_from.isoformat() if self.date_from else None,
            "date_to": self.date_to.isoformat() if self.date_to else None,
            "state": self.state,
            "company": self.company,
        }
