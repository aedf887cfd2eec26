"""Surface-form normalization for tag names.

Scraped tags arrive hyphenated ("machine-learning"); aggregation names are
space-separated ("machine learning"). Normalization folds the former onto
the latter while keeping technical tokens ("c++", "c#", ".net") intact.
"""

from __future__ import annotations

import re
import string


class EmptyAfterNormalize(ValueError):
    """The raw string normalized down to nothing."""


_HYPHEN_BETWEEN = re.compile(r"(?<=[a-z0-9])-(?=[a-z0-9])")

_LEAD_TRIM = set(string.punctuation) - {"."}
_TRAIL_TRIM = set(string.punctuation) - {"+", "#"}


def normalize_surface(raw: str) -> str:
    """Lowercase, de-hyphenate, collapse whitespace, trim edge punctuation.

    Trailing "++"/"#" and leading "." survive the trim so tokens like
    "c++", "f#", and ".net" keep their identity. Idempotent. Raises
    EmptyAfterNormalize when nothing survives.
    """
    text = raw.strip().lower()
    text = _HYPHEN_BETWEEN.sub(" ", text)
    text = " ".join(text.split())
    # Trim to a fixpoint: stripping whitespace can expose fresh trimmable
    # punctuation at the edges (": :0" -> ":0" -> "0").
    while True:
        start, end = 0, len(text)
        while start < end and text[start] in _LEAD_TRIM:
            start += 1
        while end > start and text[end - 1] in _TRAIL_TRIM:
            end -= 1
        trimmed = text[start:end].strip()
        if trimmed == text:
            break
        text = trimmed
    if not text:
        raise EmptyAfterNormalize(f"nothing left of {raw!r} after normalization")
    return text


def light_normalize(raw: str) -> str:
    """Lowercase and collapse whitespace only.

    Used for alias surfaces, which must stay literal (a hyphenated alias
    like "machine-learning" exists precisely to match hyphenated text).
    """
    text = " ".join(raw.strip().lower().split())
    if not text:
        raise EmptyAfterNormalize(f"nothing left of {raw!r} after normalization")
    return text
