"""Skill extraction: compiled lexicon matcher and batch pipeline."""

from .batch import ExtractionResult, ExtractionSummary, extract_batch, run_extraction
from .matcher import (
    SkillMatcher,
    VersionMismatch,
    boundary_ok,
    build_matcher,
    exact_token_ok,
    extract_skills,
)

__all__ = [
    "ExtractionResult",
    "ExtractionSummary",
    "SkillMatcher",
    "VersionMismatch",
    "boundary_ok",
    "build_matcher",
    "exact_token_ok",
    "extract_batch",
    "extract_skills",
    "run_extraction",
]
