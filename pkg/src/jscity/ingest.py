"""Per-file ingestion: minified-input detection, parsing, extraction."""

from __future__ import annotations

from .extract import extract_functions
from .jsparse import ParseError, parse_source
from .model import (
    PARSE_ERROR,
    PARSE_OK,
    PARSE_SKIPPED_MINIFIED,
    FileNode,
    SourceUnit,
)
from .scan import ScanConfig


class MinifiedSourceError(Exception):
    """Input looks like a minified or generated bundle, not source."""


def _minified_reason(unit: SourceUnit, config: ScanConfig) -> str | None:
    if unit.byte_len > config.max_file_bytes:
        return (f"file size {unit.byte_len} exceeds "
                f"max_file_bytes {config.max_file_bytes}")
    longest = max((len(line) for line in unit.text.split("\n")), default=0)
    if longest > config.max_line_chars:
        return (f"line length {longest} exceeds "
                f"max_line_chars {config.max_line_chars}")
    return None


def parse_unit(unit: SourceUnit, config: ScanConfig | None = None) -> dict:
    """Parse one source unit into an ESTree-shaped syntax tree.

    Raises MinifiedSourceError when the unit trips the minified-input
    heuristics, ParseError on invalid syntax.
    """
    config = config or ScanConfig()
    reason = _minified_reason(unit, config)
    if reason is not None:
        raise MinifiedSourceError(reason)
    return parse_source(unit.text)


def file_node_for_unit(unit: SourceUnit,
                       config: ScanConfig | None = None) -> FileNode:
    """Ingest one unit, folding parse failures into the FileNode status."""
    config = config or ScanConfig()
    physical_lines = len(unit.text.splitlines())
    try:
        tree = parse_unit(unit, config)
    except MinifiedSourceError as exc:
        return FileNode(path=unit.path, functions=[],
                        parse_status=PARSE_SKIPPED_MINIFIED,
                        error_message=str(exc), line_count=physical_lines)
    except ParseError as exc:
        return FileNode(path=unit.path, functions=[],
                        parse_status=PARSE_ERROR,
                        error_message=str(exc), line_count=physical_lines)
    return extract_functions(tree, unit.path,
                             count_params=config.count_params)
