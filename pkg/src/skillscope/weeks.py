"""ISO-8601 year-week bucketing ("YYYY-Www") shared by ingest and analytics."""

from __future__ import annotations

import datetime as dt
import re

_WEEK_RE = re.compile(r"^(\d{4})-W(\d{2})$")


def week_of(day: dt.date) -> str:
    """ISO year-week label for a calendar date, e.g. 2020-04-25 -> "2020-W17"."""
    year, week, _ = day.isocalendar()
    return f"{year}-W{week:02d}"


def parse_week(label: str) -> tuple[int, int]:
    """Split "YYYY-Www" into (year, week); raises ValueError on bad labels.

    Rejects weeks the calendar doesn't have (week 53 in a 52-week year).
    """
    m = _WEEK_RE.match(label.strip())
    if not m:
        raise ValueError(f"not an ISO week label: {label!r}")
    year, week = int(m.group(1)), int(m.group(2))
    try:
        dt.date.fromisocalendar(year, week, 1)
    except ValueError:
        raise ValueError(f"no such ISO week: {label!r}") from None
    return year, week


def week_monday(label: str) -> dt.date:
    """Monday of the given ISO week."""
    year, week = parse_week(label)
    return dt.date.fromisocalendar(year, week, 1)


def weeks_between(start: dt.date, end: dt.date) -> list[str]:
    """Every ISO week label touched by the inclusive date range, in order."""
    if start > end:
        return []
    labels = []
    cursor = start - dt.timedelta(days=start.isoweekday() - 1)  # Monday
    while cursor <= end:
        labels.append(week_of(cursor))
        cursor += dt.timedelta(days=7)
    return labels


def week_range(start: str, end: str) -> list[str]:
    """Inclusive run of week labels from start to end (empty when reversed)."""
    return weeks_between(week_monday(start), week_monday(end))
