"""Multi-pattern skill matcher.

All lexicon surfaces are folded into one prefix-shared trie, which is
compiled to a single pattern executed by the C regex engine. One scan
enumerates every candidate occurrence: the scan restarts one character
past each hit (not past its end), so overlapping occurrences are kept,
and surfaces that are proper prefixes of a longer hit are recovered from
a precomputed prefix table. Each candidate is then boundary-filtered.
This reproduces independent per-surface matching in a single linear pass.

Boundary rule: the characters adjacent to a matched span must be absent
or non-alphanumeric. Entries flagged exact_token_only (single-letter
skills like "r") are stricter: the neighbors must be whitespace or ASCII
punctuation, so the span stands alone as a token.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field

from ..lexicon.build import SkillLexicon

_TOKEN_DELIMS = frozenset(string.punctuation) | frozenset(string.whitespace)


def boundary_ok(text: str, start: int, end: int) -> bool:
    """Neighbors absent or non-alphanumeric."""
    if start > 0 and text[start - 1].isalnum():
        return False
    if end < len(text) and text[end].isalnum():
        return False
    return True


def exact_token_ok(text: str, start: int, end: int) -> bool:
    """Neighbors absent, whitespace, or ASCII punctuation."""
    if start > 0:
        ch = text[start - 1]
        if not (ch.isspace() or ch in _TOKEN_DELIMS):
            return False
    if end < len(text):
        ch = text[end]
        if not (ch.isspace() or ch in _TOKEN_DELIMS):
            return False
    return True


class _TrieNode:
    __slots__ = ("children", "is_word")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.is_word = False


def _trie_pattern(node: _TrieNode) -> str:
    branches = [
        re.escape(ch) + _trie_pattern(child)
        for ch, child in sorted(node.children.items())
    ]
    if not branches:
        return ""
    body = "|".join(branches)
    if node.is_word:
        # greedy optional continuation: longest surface wins at each start
        return "(?:" + body + ")?"
    return "(?:" + body + ")" if len(branches) > 1 else body


@dataclass(frozen=True)
class SkillMatcher:
    """Compiled, immutable matcher bound to one lexicon version."""

    version: str
    canonicals: frozenset[str]
    _surface_info: dict[str, tuple[str, bool]] = field(repr=False)
    _prefixes: dict[str, tuple[str, ...]] = field(repr=False)
    _pattern: re.Pattern | None = field(repr=False)

    def require_version(self, lexicon_version: str) -> None:
        if lexicon_version != self.version:
            raise VersionMismatch(
                f"matcher built from {self.version[:12]}… but pipeline wants "
                f"{lexicon_version[:12]}…"
            )


class VersionMismatch(RuntimeError):
    """The matcher was built from a different lexicon than the pipeline uses."""


def build_matcher(lexicon: SkillLexicon) -> SkillMatcher:
    """Compile a lexicon into a SkillMatcher.

    Construction is linear in total surface length. The matcher recognizes
    exactly the lexicon's surfaces under the boundary rules above.
    """
    surface_info = lexicon.surface_map()
    if not surface_info:
        return SkillMatcher(
            version=lexicon.version,
            canonicals=frozenset(),
            _surface_info={},
            _prefixes={},
            _pattern=None,
        )

    root = _TrieNode()
    for surface in surface_info:
        node = root
        for ch in surface:
            node = node.children.setdefault(ch, _TrieNode())
        node.is_word = True

    # proper-prefix surfaces of every surface, longest first
    prefixes: dict[str, tuple[str, ...]] = {}
    for surface in surface_info:
        node = root
        found = []
        for depth, ch in enumerate(surface, start=1):
            node = node.children[ch]
            if node.is_word and depth < len(surface):
                found.append(surface[:depth])
        prefixes[surface] = tuple(reversed(found))

    # [\W_] is exactly the complement of str.isalnum(), so the guard
    # enforces the left boundary during the scan itself.
    pattern = re.compile(r"[\W_](" + _trie_pattern(root) + r")")
    return SkillMatcher(
        version=lexicon.version,
        canonicals=frozenset(lexicon.canonicals()),
        _surface_info=surface_info,
        _prefixes=prefixes,
        _pattern=pattern,
    )


def extract_skills(matcher: SkillMatcher, text: str) -> set[str]:
    """Canonical skills whose surfaces occur boundary-valid in the text.

    Case-insensitive (simple case folding); pure; total on str input.
    """
    found: set[str] = set()
    pattern = matcher._pattern
    if pattern is None or not text:
        return found
    surface_info = matcher._surface_info
    prefix_table = matcher._prefixes
    everything = len(matcher.canonicals)

    haystack = " " + text.lower()
    length = len(haystack)
    search = pattern.search
    pos = 0
    while True:
        m = search(haystack, pos)
        if m is None:
            break
        start = m.start(1)
        longest = m.group(1)
        for surface in (longest, *prefix_table[longest]):
            canonical, exact_only = surface_info[surface]
            if canonical in found:
                continue
            end = start + len(surface)
            if exact_only:
                if exact_token_ok(haystack, start, end):
                    found.add(canonical)
            elif end >= length or not haystack[end].isalnum():
                found.add(canonical)
        if len(found) == everything:
            break
        pos = m.start() + 1
    return found
