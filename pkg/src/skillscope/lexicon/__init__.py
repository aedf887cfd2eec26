"""Skill gazetteer: tag parsing, normalization, compilation, persistence."""

from importlib import resources

from .build import (
    DanglingAlias,
    LexiconEntry,
    SkillLexicon,
    SurfaceConflict,
    compile_lexicon,
    content_digest,
)
from .io import FormatError, load_alias_file, load_exclusion_file, load_lexicon, save_lexicon
from .normalize import EmptyAfterNormalize, light_normalize, normalize_surface
from .tags import SelectorMiss, TagEntry, TagSelector, load_tag_file, parse_tag_pages


def default_data_path(name: str):
    """Path to one of the packaged lexicon data files."""
    return resources.files("skillscope.data").joinpath(name)


def build_reference_lexicon() -> SkillLexicon:
    """Compile the shipped reference tag list with the default exclusion
    and alias files."""
    with resources.as_file(default_data_path("tags_reference.txt")) as tags_path:
        tags = load_tag_file(tags_path, source="reference")
    with resources.as_file(default_data_path("exclusions_default.txt")) as excl_path:
        exclusions = load_exclusion_file(excl_path)
    with resources.as_file(default_data_path("aliases_default.txt")) as alias_path:
        aliases = load_alias_file(alias_path)
    return compile_lexicon(tags, exclusions=exclusions, aliases=aliases)


__all__ = [
    "DanglingAlias",
    "EmptyAfterNormalize",
    "FormatError",
    "LexiconEntry",
    "SelectorMiss",
    "SkillLexicon",
    "SurfaceConflict",
    "TagEntry",
    "TagSelector",
    "build_reference_lexicon",
    "compile_lexicon",
    "content_digest",
    "default_data_path",
    "light_normalize",
    "load_alias_file",
    "load_exclusion_file",
    "load_lexicon",
    "load_tag_file",
    "normalize_surface",
    "parse_tag_pages",
    "save_lexicon",
]
