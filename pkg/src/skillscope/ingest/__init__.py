"""Collection of job postings from pluggable sources on a weekly cadence."""

from .crawl import (
    CrawlReport,
    Schedule,
    SinkError,
    TermTally,
    daemon_loop,
    run_crawl,
    schedule_tick,
)
from .records import (
    BadDate,
    JobPosting,
    MissingField,
    ParseError,
    dedup_key,
    parse_date,
    parse_posting,
)
from .sources import FixtureSource, LiveSource, SourceAdapter, SourceUnavailable
from .states import UNKNOWN_STATE, VALID_STATES, normalize_state
from .synth import BadProfile, SynthProfile, SyntheticSource, TrackPlan, synth_source

__all__ = [
    "BadDate",
    "BadProfile",
    "CrawlReport",
    "FixtureSource",
    "JobPosting",
    "LiveSource",
    "MissingField",
    "ParseError",
    "Schedule",
    "SinkError",
    "SourceAdapter",
    "SourceUnavailable",
    "SynthProfile",
    "SyntheticSource",
    "TermTally",
    "TrackPlan",
    "UNKNOWN_STATE",
    "VALID_STATES",
    "daemon_loop",
    "dedup_key",
    "normalize_state",
    "parse_date",
    "parse_posting",
    "run_crawl",
    "schedule_tick",
    "synth_source",
]
