"""Deterministic synthetic posting generator with planted skill frequencies.

Given a seed and a profile, the generator emits a reproducible stream of
raw records per track. Each skill surface named in the profile is planted
into an exact number of descriptions (round(frequency * count), ties to
even); every other word comes from a filler pool that contains no lexicon
surface form, so document-frequency ground truth is known at generation
time. Exact counts assume the planted surfaces do not fire one another
(e.g. do not plant both "learning" and "machine learning").
"""

from __future__ import annotations

import datetime as dt
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ..terms import ALL_TERMS, QueryTerm, UnknownTerm, parse_term
from .sources import Batch
from .states import VALID_STATES

BATCH_SIZE = 100


class BadProfile(ValueError):
    """Profile rejected: frequency out of [0,1], bad date range, etc."""


# Deliberately skill-free vocabulary: no word is a lexicon surface and no
# adjacent pair composes one.
FILLER_WORDS = (
    "the a an of to and or for with will our your their team candidates role "
    "responsibilities collaborate stakeholders environment opportunity benefits "
    "competitive salary location hybrid onsite apply today join growing "
    "organization seeking motivated oriented strong communication ability years "
    "required preferred degree bachelor related person support deliver results "
    "maintain attention detail across multiple projects deadlines fast paced "
    "culture inclusive equal employer candidate must have plus bonus health "
    "insurance retirement remote flexible hours about us what you bring we offer"
).split()

DEFAULT_COMPANIES = (
    "Acme Analytics", "Globex", "Initech", "Umbrella Insights", "Hooli",
    "Stark Metrics", "Wayne Numbers", "Wonka Labs", "Tyrell Research",
    "Cyberdyne Systems", "Aperture Decisions", "Vandelay Industries",
)

DEFAULT_CITIES = (
    "Springfield", "Riverton", "Fairview", "Kingsport", "Maplewood",
    "Cedar Falls", "Lakeside", "", "",
)

_TITLE_SHAPES = ("Senior {}", "Junior {}", "{} II", "Lead {}", "{}", "Staff {}")


@dataclass(frozen=True)
class TrackPlan:
    """How many postings one track gets and which skills they carry."""

    count: int
    skills: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class SynthProfile:
    """Planted skill/term/state/date frequency spec for the generator."""

    tracks: dict[QueryTerm, TrackPlan]
    date_from: dt.date
    date_to: dt.date
    states: dict[str, float] = field(default_factory=lambda: {"CA": 1.0})
    companies: tuple[str, ...] = DEFAULT_COMPANIES

    def __post_init__(self):
        if self.date_from > self.date_to:
            raise BadProfile(f"empty date range: {self.date_from} > {self.date_to}")
        if not self.tracks:
            raise BadProfile("profile plans no postings")
        for term, plan in self.tracks.items():
            if plan.count < 0:
                raise BadProfile(f"negative posting count for {term.slug}")
            for skill, freq in plan.skills.items():
                if not 0.0 <= freq <= 1.0:
                    raise BadProfile(f"frequency out of range for {skill!r}: {freq}")
                if not skill.strip():
                    raise BadProfile("blank skill surface in profile")
        if not self.states:
            raise BadProfile("profile needs at least one state weight")
        for code, weight in self.states.items():
            if code not in VALID_STATES:
                raise BadProfile(f"unknown state code in profile: {code!r}")
            if weight < 0:
                raise BadProfile(f"negative state weight for {code}")
        if sum(self.states.values()) <= 0:
            raise BadProfile("state weights sum to zero")

    @classmethod
    def from_dict(cls, spec: dict) -> "SynthProfile":
        """Build a profile from the JSON shape used by profile files.

        Either a flat {"count": N, "skills": {...}} applied to all three
        tracks, or per-track sections under "terms". Dates are ISO.
        """
        try:
            date_from = dt.date.fromisoformat(spec["date_from"])
            date_to = dt.date.fromisoformat(spec["date_to"])
        except (KeyError, ValueError) as exc:
            raise BadProfile(f"bad or missing date range: {exc}") from exc
        tracks: dict[QueryTerm, TrackPlan] = {}
        if "terms" in spec:
            for slug, section in spec["terms"].items():
                try:
                    term = parse_term(slug)
                except UnknownTerm as exc:
                    raise BadProfile(str(exc)) from exc
                tracks[term] = TrackPlan(
                    count=int(section.get("count", 0)),
                    skills={str(k): float(v) for k, v in section.get("skills", {}).items()},
                )
        else:
            plan = TrackPlan(
                count=int(spec.get("count", 0)),
                skills={str(k): float(v) for k, v in spec.get("skills", {}).items()},
            )
            tracks = {term: plan for term in ALL_TERMS}
        kwargs = {}
        if "states" in spec:
            kwargs["states"] = {str(k): float(v) for k, v in spec["states"].items()}
        if "companies" in spec:
            kwargs["companies"] = tuple(str(c) for c in spec["companies"])
        return cls(tracks=tracks, date_from=date_from, date_to=date_to, **kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "SynthProfile":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def planted_count(freq: float, n: int) -> int:
    """Number of documents a skill at document-frequency `freq` lands in."""
    return int(round(freq * n))


class SyntheticSource:
    """SourceAdapter that emits a seeded synthetic corpus.

    Each track gets an independent RNG derived from (seed, track), so the
    stream for one term is identical regardless of fetch order.
    """

    def __init__(self, seed: int, profile: SynthProfile):
        self.seed = seed
        self.profile = profile
        self.name = f"synth:seed={seed}"

    def _records(self, term: QueryTerm) -> list[dict[str, str]]:
        plan = self.profile.tracks.get(term)
        if plan is None or plan.count == 0:
            return []
        rng = random.Random(f"{self.seed}:{term.slug}")
        n = plan.count
        planted: dict[int, list[str]] = {i: [] for i in range(n)}
        for skill in sorted(plan.skills):
            k = planted_count(plan.skills[skill], n)
            for idx in rng.sample(range(n), k):
                planted[idx].append(skill)

        span = (self.profile.date_to - self.profile.date_from).days
        state_codes = sorted(self.profile.states)
        state_weights = [self.profile.states[c] for c in state_codes]
        display = term.value.title()

        records = []
        for i in range(n):
            words = rng.choices(FILLER_WORDS, k=rng.randint(30, 70))
            for surface in planted[i]:
                words.insert(rng.randint(0, len(words)), surface)
            posted = self.profile.date_from + dt.timedelta(days=rng.randint(0, span))
            records.append({
                "job_title": rng.choice(_TITLE_SHAPES).format(display),
                "company": rng.choice(self.profile.companies),
                "description": " ".join(words) + ".",
                "posted_date": posted.isoformat(),
                "state": rng.choices(state_codes, weights=state_weights)[0],
                "city": rng.choice(DEFAULT_CITIES),
                "term": term.value,
            })
        return records

    def fetch(self, term: QueryTerm) -> Iterator[Batch]:
        records = self._records(term)
        for i in range(0, len(records), BATCH_SIZE):
            yield records[i : i + BATCH_SIZE]


def synth_source(seed: int, profile: SynthProfile | dict) -> SyntheticSource:
    """Convenience constructor accepting either a profile or its dict form."""
    if isinstance(profile, dict):
        profile = SynthProfile.from_dict(profile)
    return SyntheticSource(seed, profile)
