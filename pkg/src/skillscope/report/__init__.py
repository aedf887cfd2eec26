"""File-based chart rendering."""

from .figures import render_states, render_timeseries, render_top_skills, render_weekly

__all__ = [
    "render_states",
    "render_timeseries",
    "render_top_skills",
    "render_weekly",
]
