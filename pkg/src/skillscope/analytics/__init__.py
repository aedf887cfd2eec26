"""Aggregation queries over the posting store."""

from .aggregate import (
    UnknownSkill,
    company_counts,
    skill_timeseries,
    state_counts,
    top_skills,
    weekly_counts,
)
from .filters import BadFilter, Filter

__all__ = [
    "BadFilter",
    "Filter",
    "UnknownSkill",
    "company_counts",
    "skill_timeseries",
    "state_counts",
    "top_skills",
    "weekly_counts",
]
