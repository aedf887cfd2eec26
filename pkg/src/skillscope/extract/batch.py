"""Batch extraction over stored postings.

extract_batch is the pure mapping from documents to per-document skill
sets. run_extraction wraps it with store bookkeeping: only postings not
yet extracted under the matcher's lexicon version are processed (a
version change makes everything eligible again), and results are written
back under that version.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .matcher import SkillMatcher, extract_skills


@dataclass(frozen=True)
class ExtractionResult:
    posting_id: int
    skills: frozenset[str]
    lexicon_version: str


def extract_batch(
    matcher: SkillMatcher,
    postings: Iterable[tuple[int, str]],
    workers: int = 1,
) -> Iterator[ExtractionResult]:
    """Extract skills from (posting_id, description) pairs.

    Result order follows input order regardless of worker count.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    version = matcher.version
    if workers == 1:
        for posting_id, description in postings:
            yield ExtractionResult(
                posting_id=posting_id,
                skills=frozenset(extract_skills(matcher, description)),
                lexicon_version=version,
            )
        return
    items = list(postings)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        skill_sets = pool.map(
            lambda item: extract_skills(matcher, item[1]), items, chunksize=64
        )
        for (posting_id, _), skills in zip(items, skill_sets):
            yield ExtractionResult(
                posting_id=posting_id,
                skills=frozenset(skills),
                lexicon_version=version,
            )


@dataclass(frozen=True)
class ExtractionSummary:
    lexicon_version: str
    processed: int
    skipped: int
    skills_written: int

    def as_dict(self) -> dict:
        return {
            "lexicon_version": self.lexicon_version,
            "processed": self.processed,
            "skipped": self.skipped,
            "skills_written": self.skills_written,
        }


def run_extraction(
    store,
    matcher: SkillMatcher,
    force: bool = False,
    workers: int = 1,
    since_week: str | None = None,
    batch_size: int = 500,
) -> ExtractionSummary:
    """Extract every eligible stored posting and persist the results.

    Already-extracted postings under the same lexicon version are skipped
    unless force is set. StoreError propagates from reads and writes.
    """
    version = matcher.version
    total = store.count_postings(since_week=since_week)
    pending = store.unextracted_postings(
        version, force=force, since_week=since_week
    )
    processed = 0
    written = 0
    batch: list[tuple[int, str]] = []

    def flush() -> None:
        nonlocal processed, written
        if not batch:
            return
        results = list(extract_batch(matcher, batch, workers=workers))
        written += store.write_extractions(results)
        processed += len(batch)
        batch.clear()

    for row in pending:
        batch.append(row)
        if len(batch) >= batch_size:
            flush()
    flush()
    store.set_active_lexicon(version, matcher.canonicals)
    return ExtractionSummary(
        lexicon_version=version,
        processed=processed,
        skipped=total - processed,
        skills_written=written,
    )
