"""Compile tag entries, exclusions, aliases, and manual additions into the
versioned skill lexicon the matcher is built from."""

from __future__ import annotations

import datetime as dt
import hashlib
import json
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .normalize import EmptyAfterNormalize, light_normalize, normalize_surface
from .tags import TagEntry


class SurfaceConflict(ValueError):
    """One surface string would map to two different canonical skills."""

    def __init__(self, surface: str, canonicals: Sequence[str]):
        self.surface = surface
        self.canonicals = tuple(sorted(canonicals))
        super().__init__(f"surface {surface!r} maps to multiple canonicals: {self.canonicals}")


class DanglingAlias(ValueError):
    """An alias points at a canonical that no tag or manual entry introduces."""


@dataclass(frozen=True)
class LexiconEntry:
    """One canonical skill plus every literal surface that matches it."""

    canonical: str
    surfaces: tuple[str, ...] = ()
    origin: str = "tag"  # tag | alias | manual
    exact_token_only: bool = False

    def __post_init__(self):
        if not self.canonical:
            raise ValueError("canonical must be non-empty")
        if not self.surfaces:
            # the display form is always a valid surface of itself
            object.__setattr__(self, "surfaces", (self.canonical,))
        if any(not s for s in self.surfaces):
            raise ValueError(f"entry {self.canonical!r} has an empty surface")


@dataclass(frozen=True)
class SkillLexicon:
    """Immutable compiled gazetteer with a content-derived version digest."""

    entries: tuple[LexiconEntry, ...]
    version: str
    built_at: str

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def canonicals(self) -> frozenset[str]:
        return frozenset(e.canonical for e in self.entries)

    def surface_map(self) -> dict[str, tuple[str, bool]]:
        """surface -> (canonical, exact_token_only); guaranteed a function."""
        mapping: dict[str, tuple[str, bool]] = {}
        for entry in self.entries:
            for surface in entry.surfaces:
                prior = mapping.get(surface)
                if prior is not None and prior[0] != entry.canonical:
                    raise SurfaceConflict(surface, [prior[0], entry.canonical])
                mapping[surface] = (entry.canonical, entry.exact_token_only)
        return mapping


def content_digest(entries: Sequence[LexiconEntry]) -> str:
    """Deterministic digest over the compiled content (not built_at)."""
    payload = [
        [e.canonical, list(e.surfaces), e.origin, e.exact_token_only]
        for e in sorted(entries, key=lambda e: e.canonical)
    ]
    blob = json.dumps(["skill-lexicon/1", payload], separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _normalized_exclusions(exclusions: Iterable[str]) -> frozenset[str]:
    out = set()
    for raw in exclusions:
        for fn in (normalize_surface, light_normalize):
            try:
                out.add(fn(raw))
            except EmptyAfterNormalize:
                pass
    return frozenset(out)


def compile_lexicon(
    tags: Sequence[TagEntry],
    exclusions: Iterable[str] = (),
    aliases: Mapping[str, str] | Iterable[tuple[str, str]] = (),
    manual: Sequence[LexiconEntry] = (),
) -> SkillLexicon:
    """Build a SkillLexicon from its four ingredient lists.

    Tags are normalized and collapsed (normalized form = canonical = sole
    surface); manual entries introduce or extend canonicals; aliases
    attach extra literal surfaces to existing canonicals; exclusions are
    applied after normalization and may empty the lexicon. Output ordering
    is lexicographic by canonical, so the version digest is stable under
    input permutation.

    Raises SurfaceConflict if any surface would map to two canonicals and
    DanglingAlias if an alias targets a canonical nothing introduces.
    """
    excluded = _normalized_exclusions(exclusions)

    # surface -> canonical, for conflict detection across all sources
    claims: dict[str, str] = {}

    def claim(surface: str, canonical: str) -> None:
        prior = claims.get(surface)
        if prior is not None and prior != canonical:
            raise SurfaceConflict(surface, [prior, canonical])
        claims[surface] = canonical

    entries: dict[str, dict] = {}

    def add_entry(canonical: str, surfaces: Iterable[str], origin: str) -> None:
        slot = entries.setdefault(canonical, {"surfaces": set(), "origin": origin})
        for surface in surfaces:
            if surface in excluded:
                continue
            claim(surface, canonical)
            slot["surfaces"].add(surface)

    for tag in tags:
        try:
            canonical = normalize_surface(tag.raw_name)
        except EmptyAfterNormalize:
            continue
        if canonical in excluded:
            continue
        add_entry(canonical, [canonical], "tag")

    for entry in manual:
        canonical = light_normalize(entry.canonical)
        if canonical in excluded:
            continue
        surfaces = {light_normalize(s) for s in entry.surfaces}
        add_entry(canonical, surfaces | {canonical}, "manual")

    alias_pairs = aliases.items() if isinstance(aliases, Mapping) else aliases
    for raw_surface, raw_target in alias_pairs:
        surface = light_normalize(raw_surface)
        try:
            target = normalize_surface(raw_target)
        except EmptyAfterNormalize as exc:
            raise DanglingAlias(f"alias {raw_surface!r} has an empty target") from exc
        if target in excluded:
            continue
        if target not in entries:
            raise DanglingAlias(
                f"alias {surface!r} -> {target!r}: no tag or manual entry introduces the target"
            )
        if surface in excluded:
            continue
        claim(surface, target)
        entries[target]["surfaces"].add(surface)

    compiled = []
    for canonical in sorted(entries):
        slot = entries[canonical]
        if not slot["surfaces"]:
            continue
        surfaces = tuple(sorted(slot["surfaces"]))
        compiled.append(
            LexiconEntry(
                canonical=canonical,
                surfaces=surfaces,
                origin=slot["origin"],
                exact_token_only=any(len(s) == 1 for s in surfaces),
            )
        )
    built = tuple(compiled)
    return SkillLexicon(
        entries=built,
        version=content_digest(built),
        built_at=dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds"),
    )


def relabel(lexicon: SkillLexicon, built_at: str) -> SkillLexicon:
    """Same content, different build timestamp (version digest unchanged)."""
    return replace(lexicon, built_at=built_at)
