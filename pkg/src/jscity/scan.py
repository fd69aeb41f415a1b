"""Source-tree scanning: extension filters, exclude globs, UTF-8 intake."""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .model import SourceUnit

logger = logging.getLogger(__name__)

DEFAULT_INCLUDE_EXTENSIONS = (".js", ".mjs", ".cjs")
DEFAULT_EXCLUDE_GLOBS = ("node_modules/**", ".git/**", "*.min.js")


class ScanError(Exception):
    pass


@dataclass
class ScanConfig:
    """What to pick up from a source tree and when to give up on a file.

    Exclude globs float like .gitignore patterns: a pattern without a
    leading anchor matches at any directory level, ``*``/``?`` stay
    within one path segment, ``**`` crosses segments.
    """

    include_extensions: tuple[str, ...] = DEFAULT_INCLUDE_EXTENSIONS
    exclude_globs: tuple[str, ...] = DEFAULT_EXCLUDE_GLOBS
    max_file_bytes: int = 5 * 1024 * 1024
    max_line_chars: int = 5000
    count_params: bool = False

    def to_dict(self) -> dict:
        return {
            "include_extensions": list(self.include_extensions),
            "exclude_globs": list(self.exclude_globs),
            "max_file_bytes": self.max_file_bytes,
            "max_line_chars": self.max_line_chars,
            "count_params": self.count_params,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScanConfig":
        cfg = cls()
        return cls(
            include_extensions=tuple(
                data.get("include_extensions", cfg.include_extensions)),
            exclude_globs=tuple(data.get("exclude_globs", cfg.exclude_globs)),
            max_file_bytes=int(data.get("max_file_bytes", cfg.max_file_bytes)),
            max_line_chars=int(data.get("max_line_chars", cfg.max_line_chars)),
            count_params=bool(data.get("count_params", cfg.count_params)),
        )


def _glob_to_regex(pattern: str) -> re.Pattern:
    out = []
    i = 0
    n = len(pattern)
    while i < n:
        c = pattern[i]
        if c == "*":
            if pattern[i:i + 2] == "**":
                out.append(".*")
                i += 2
            else:
                out.append("[^/]*")
                i += 1
        elif c == "?":
            out.append("[^/]")
            i += 1
        else:
            out.append(re.escape(c))
            i += 1
    return re.compile(r"(?:^|.*/)" + "".join(out) + r"\Z", re.DOTALL)


class _ExcludeMatcher:
    def __init__(self, globs: tuple[str, ...]):
        self._regexes = [_glob_to_regex(g) for g in globs]
        # `dir/**` patterns exclude whole subtrees, which lets the walk
        # prune them instead of descending.
        self._prune = [_glob_to_regex(g[:-3]) for g in globs
                       if g.endswith("/**")]

    def matches_file(self, rel_path: str) -> bool:
        return any(r.match(rel_path) for r in self._regexes)

    def prunes_directory(self, rel_path: str) -> bool:
        return any(r.match(rel_path) for r in self._prune)


def scan_sources(root: str | Path, config: ScanConfig | None = None,
                 warnings: list[str] | None = None) -> list[SourceUnit]:
    """Collect all matching source files under ``root``.

    Results are sorted lexicographically by relative path, so two scans
    of the same tree are identical. Unreadable or non-UTF-8 files are
    skipped with a recorded warning; a missing root is fatal.
    """
    config = config or ScanConfig()
    root_path = Path(root)
    if not root_path.is_dir():
        raise ScanError(f"scan root not found or not a directory: {root}")
    matcher = _ExcludeMatcher(config.exclude_globs)
    extensions = tuple(config.include_extensions)

    units: list[SourceUnit] = []
    for dirpath, dirnames, filenames in os.walk(root_path):
        rel_dir = os.path.relpath(dirpath, root_path).replace(os.sep, "/")
        if rel_dir == ".":
            rel_dir = ""
        dirnames[:] = sorted(
            d for d in dirnames
            if not matcher.prunes_directory(f"{rel_dir}/{d}" if rel_dir else d)
        )
        for filename in sorted(filenames):
            if not filename.endswith(extensions):
                continue
            rel_path = f"{rel_dir}/{filename}" if rel_dir else filename
            if matcher.matches_file(rel_path):
                continue
            full = Path(dirpath) / filename
            try:
                raw = full.read_bytes()
            except OSError as exc:
                message = f"unreadable file skipped: {rel_path} ({exc})"
                logger.warning(message)
                if warnings is not None:
                    warnings.append(message)
                continue
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                message = f"non-UTF-8 file skipped: {rel_path} ({exc})"
                logger.warning(message)
                if warnings is not None:
                    warnings.append(message)
                continue
            units.append(SourceUnit(path=rel_path, text=text,
                                    byte_len=len(raw)))
    units.sort(key=lambda u: u.path)
    return units
