"""Chart rendering for the report path.

Everything draws through the Agg backend straight to files; no display
is ever needed. Each function takes already-aggregated rows (the same
shapes the analytics functions return) and writes one PNG.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STYLE = {
    "figure.figsize": (9, 4.5),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "font.size": 10,
}


def _week_ticks(ax, weeks: Sequence[str]) -> None:
    # cap tick count so long windows stay legible
    step = max(1, len(weeks) // 12)
    ax.set_xticks(range(0, len(weeks), step))
    ax.set_xticklabels(
        [weeks[i] for i in range(0, len(weeks), step)], rotation=45, ha="right"
    )


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def render_weekly(rows: Sequence[Mapping], path: str | Path, title: str) -> Path:
    """Line chart of postings per week."""
    weeks = [r["week"] for r in rows]
    counts = [r["count"] for r in rows]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.plot(range(len(weeks)), counts, marker="o", markersize=3)
        _week_ticks(ax, weeks)
        ax.set_ylabel("postings")
        ax.set_title(title)
        ax.set_ylim(bottom=0)
        fig.tight_layout()
        return _save(fig, path)


def render_timeseries(
    weeks: Sequence[str],
    series: Mapping[str, Sequence[int]],
    path: str | Path,
    title: str,
) -> Path:
    """One line per skill over the shared week axis."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for skill, counts in series.items():
            ax.plot(range(len(weeks)), counts, marker="o", markersize=3, label=skill)
        _week_ticks(ax, weeks)
        ax.set_ylabel("postings mentioning skill")
        ax.set_title(title)
        ax.set_ylim(bottom=0)
        ax.legend(loc="upper left", frameon=False)
        fig.tight_layout()
        return _save(fig, path)


def render_top_skills(rows: Sequence[Mapping], path: str | Path, title: str) -> Path:
    """Horizontal bars, most frequent skill on top."""
    labels = [r["skill"] for r in rows][::-1]
    counts = [r["count"] for r in rows][::-1]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(8, max(3, 0.3 * len(labels) + 1)))
        ax.barh(range(len(labels)), counts)
        ax.set_yticks(range(len(labels)))
        ax.set_yticklabels(labels)
        ax.set_xlabel("postings")
        ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)


def render_states(counts: Mapping[str, int], path: str | Path, title: str) -> Path:
    """Bar chart of postings by state, highest first."""
    pairs = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    labels = [p[0] for p in pairs]
    values = [p[1] for p in pairs]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(max(6, 0.28 * len(labels) + 2), 4))
        ax.bar(range(len(labels)), values)
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=90 if len(labels) > 15 else 0)
        ax.set_ylabel("postings")
        ax.set_title(title)
        fig.tight_layout()
        return _save(fig, path)
