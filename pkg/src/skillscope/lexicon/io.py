"""Lexicon persistence: a JSON file with a tamper-evident version digest."""

from __future__ import annotations

import json
from pathlib import Path

from .build import LexiconEntry, SkillLexicon, content_digest
from .tags import _strip_comment

FORMAT_TAG = "skill-lexicon/1"


class FormatError(ValueError):
    """The file is not a lexicon, or its digest does not match its content."""


def save_lexicon(lexicon: SkillLexicon, path: str | Path) -> None:
    document = {
        "format": FORMAT_TAG,
        "version": lexicon.version,
        "built_at": lexicon.built_at,
        "entries": [
            {
                "canonical": e.canonical,
                "surfaces": list(e.surfaces),
                "origin": e.origin,
                "exact_token_only": e.exact_token_only,
            }
            for e in lexicon.entries
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_lexicon(path: str | Path) -> SkillLexicon:
    """Read a saved lexicon, verifying the digest against the content."""
    with open(path, encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(document, dict) or document.get("format") != FORMAT_TAG:
        raise FormatError(f"{path}: not a {FORMAT_TAG} file")
    try:
        entries = tuple(
            LexiconEntry(
                canonical=item["canonical"],
                surfaces=tuple(item["surfaces"]),
                origin=item.get("origin", "tag"),
                exact_token_only=bool(item.get("exact_token_only", False)),
            )
            for item in document["entries"]
        )
        version = document["version"]
        built_at = document["built_at"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: malformed lexicon entry: {exc}") from exc
    recomputed = content_digest(entries)
    if recomputed != version:
        raise FormatError(
            f"{path}: version digest mismatch (file says {version[:12]}…, "
            f"content is {recomputed[:12]}…)"
        )
    lexicon = SkillLexicon(entries=entries, version=version, built_at=built_at)
    lexicon.surface_map()  # re-check the surface-function property on load
    return lexicon


def load_exclusion_file(path: str | Path) -> list[str]:
    """One excluded surface per line; # comments; UTF-8."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            text = _strip_comment(line).strip()
            if text:
                out.append(text)
    return out


def load_alias_file(path: str | Path) -> list[tuple[str, str]]:
    """Alias lines of the form "surface -> canonical"; # comments; UTF-8."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = _strip_comment(line).strip()
            if not text:
                continue
            if "->" not in text:
                raise FormatError(f"{path}:{lineno}: expected 'surface -> canonical'")
            surface, target = (part.strip() for part in text.split("->", 1))
            if not surface or not target:
                raise FormatError(f"{path}:{lineno}: empty side in alias line")
            pairs.append((surface, target))
    return pairs
