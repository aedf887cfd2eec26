"""Tag acquisition: fixture pages from a tag directory, or plain tag lists."""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path


class SelectorMiss(ValueError):
    """A document yielded zero tags — the fixture or selector has drifted."""


@dataclass(frozen=True)
class TagEntry:
    """One raw tag name as scraped, with the page it came from."""

    raw_name: str
    source: str


@dataclass(frozen=True)
class TagSelector:
    """Which markup elements carry tag names.

    Matches elements of the given name whose `attr` value contains
    `attr_value` as a whitespace-separated token (the usual class idiom).
    """

    element: str = "a"
    attr: str = "class"
    attr_value: str = "post-tag"


class _TagCollector(HTMLParser):
    def __init__(self, selector: TagSelector):
        super().__init__()
        self.selector = selector
        self.names: list[str] = []
        self._depth = 0

    def handle_starttag(self, tag, attrs):
        if self._depth:
            self._depth += 1
            return
        if tag != self.selector.element:
            return
        for name, value in attrs:
            if name == self.selector.attr and value is not None:
                if self.selector.attr_value in value.split():
                    self._depth = 1
                    self._text: list[str] = []
                    return

    def handle_endtag(self, tag):
        if self._depth:
            self._depth -= 1
            if self._depth == 0:
                text = "".join(self._text).strip()
                if text:
                    self.names.append(text)

    def handle_data(self, data):
        if self._depth:
            self._text.append(data)


def parse_tag_pages(
    documents: list[tuple[str, str]] | list[str],
    selector: TagSelector | None = None,
) -> list[TagEntry]:
    """Pull every tag name out of saved tag-directory pages, in order.

    Documents are (page_id, markup) pairs, or bare markup strings.
    Duplicates across pages are preserved; collapsing is the compiler's
    job. Raises SelectorMiss if any document yields nothing.
    """
    selector = selector or TagSelector()
    entries: list[TagEntry] = []
    for i, doc in enumerate(documents):
        page_id, markup = doc if isinstance(doc, tuple) else (f"page-{i}", doc)
        collector = _TagCollector(selector)
        collector.feed(markup)
        if not collector.names:
            raise SelectorMiss(f"no tags found in {page_id} with selector {selector}")
        entries.extend(TagEntry(raw_name=name, source=page_id) for name in collector.names)
    return entries


def _strip_comment(line: str) -> str:
    # '#' opens a comment only at line start or after whitespace, so tags
    # like "c#" survive.
    if line.lstrip().startswith("#"):
        return ""
    for i, ch in enumerate(line):
        if ch == "#" and i > 0 and line[i - 1].isspace():
            return line[:i]
    return line


def load_tag_file(path: str | Path, source: str | None = None) -> list[TagEntry]:
    """Read a plain-text tag list: UTF-8, one raw tag per line, # comments."""
    path = Path(path)
    src = source or str(path)
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            text = _strip_comment(line).strip()
            if text:
                entries.append(TagEntry(raw_name=text, source=src))
    return entries
