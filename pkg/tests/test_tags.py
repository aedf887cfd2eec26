from pathlib import Path

import pytest

from skillscope.lexicon.tags import (
    SelectorMiss,
    TagEntry,
    TagSelector,
    load_tag_file,
    parse_tag_pages,
)

FIXTURES = Path(__file__).parent / "fixtures"


def page(name: str) -> str:
    return (FIXTURES / name).read_text()


def test_parse_single_page_collects_only_selected_anchors():
    entries = parse_tag_pages([("p1", page("tag_page_1.html"))])
    assert [e.raw_name for e in entries] == ["python", "sql", "machine-learning", "c++", "r"]
    assert all(e.source == "p1" for e in entries)


def test_parse_matches_class_token_not_substring():
    # page 1 plants <span class="post-tag"> and <a class="post-tagged">
    names = [e.raw_name for e in parse_tag_pages([page("tag_page_1.html")])]
    assert "not-a-tag" not in names
    assert "also-not-a-tag" not in names


def test_parse_reads_nested_markup_text():
    # page 2 wraps one tag name in <b>
    names = [e.raw_name for e in parse_tag_pages([page("tag_page_2.html")])]
    assert "tableau" in names


def test_parse_preserves_duplicates_across_pages():
    entries = parse_tag_pages(
        [("p1", page("tag_page_1.html")), ("p2", page("tag_page_2.html"))]
    )
    names = [e.raw_name for e in entries]
    assert names.count("python") == 2  # appears on both pages
    assert [e.source for e in entries if e.raw_name == "python"] == ["p1", "p2"]


def test_parse_empty_page_is_a_selector_miss():
    with pytest.raises(SelectorMiss, match="stale"):
        parse_tag_pages([("stale", page("tag_page_empty.html"))])


def test_parse_with_custom_selector():
    entries = parse_tag_pages(
        [page("tag_page_empty.html")],
        selector=TagSelector(element="a", attr="class", attr_value="tag-link"),
    )
    assert [e.raw_name for e in entries] == ["python", "sql"]


def test_load_tag_file(tmp_path):
    path = tmp_path / "tags.txt"
    path.write_text(
        "# a heading comment\n"
        "python\n"
        "\n"
        "c#\n"           # the '#' here is part of the tag, not a comment
        "sql  # trailing comment\n"
        "  machine-learning  \n"
    )
    entries = load_tag_file(path, source="unit")
    assert entries == [
        TagEntry("python", "unit"),
        TagEntry("c#", "unit"),
        TagEntry("sql", "unit"),
        TagEntry("machine-learning", "unit"),
    ]


def test_load_tag_file_default_source_is_path(tmp_path):
    path = tmp_path / "tags.txt"
    path.write_text("python\n")
    assert load_tag_file(path)[0].source == str(path)
