"""Hierarchical code model: source units, functions, files, directories."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

PARSE_OK = "ok"
PARSE_SKIPPED_MINIFIED = "skipped_minified"
PARSE_ERROR = "parse_error"

KIND_DECLARATION = "declaration"
KIND_EXPRESSION = "expression"
KIND_ARROW = "arrow"
KIND_METHOD = "method"

NAMED = "named"
ANONYMOUS = "anonymous"


class CodeModelError(Exception):
    pass


class DuplicatePathError(CodeModelError):
    pass


def check_relative_path(path: str) -> str:
    """Validate a `/`-separated relative path; returns it unchanged."""
    if not path:
        raise CodeModelError("empty path")
    if path.startswith("/"):
        raise CodeModelError(f"absolute path not allowed: {path!r}")
    if ".." in path.split("/"):
        raise CodeModelError(f"path may not contain '..': {path!r}")
    return path


@dataclass
class SourceUnit:
    """One scanned file: relative path plus decoded UTF-8 content."""

    path: str
    text: str
    byte_len: int

    def __post_init__(self):
        check_relative_path(self.path)

    @classmethod
    def from_text(cls, path: str, text: str) -> "SourceUnit":
        return cls(path=path, text=text, byte_len=len(text.encode("utf-8")))


@dataclass
class FunctionNode:
    """One function occurrence; children mirror lexical nesting.

    Line numbers are 1-based inclusive; columns 0-based (needed to order
    multiple functions sharing a physical line).
    """

    id: str
    name: str | None
    kind: str
    naming: str
    start_line: int
    end_line: int
    start_col: int
    end_col: int
    own_var_count: int
    param_count: int
    children: list["FunctionNode"] = field(default_factory=list)

    @property
    def display_name(self) -> str:
        return self.name if self.name else "(anonymous)"

    def walk(self) -> Iterator["FunctionNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def contains(self, other: "FunctionNode") -> bool:
        return (self.start_line, self.start_col) <= (other.start_line, other.start_col) \
            and (other.end_line, other.end_col) <= (self.end_line, self.end_col)


@dataclass
class FileNode:
    """Parsed file: the function forest plus parse outcome."""

    path: str
    functions: list[FunctionNode] = field(default_factory=list)
    parse_status: str = PARSE_OK
    error_message: str | None = None
    line_count: int = 0

    def walk_functions(self) -> Iterator[FunctionNode]:
        for fn in self.functions:
            yield from fn.walk()


@dataclass
class DirectoryNode:
    """Directory with child directories and files, both sorted by name."""

    name: str
    path: str  # '' for the root
    directories: list["DirectoryNode"] = field(default_factory=list)
    files: list[FileNode] = field(default_factory=list)

    def walk_directories(self) -> Iterator["DirectoryNode"]:
        yield self
        for sub in self.directories:
            yield from sub.walk_directories()

    def walk_files(self) -> Iterator[FileNode]:
        for sub in self.directories:
            yield from sub.walk_files()
        for f in self.files:
            yield f


@dataclass
class CodeTree:
    """The whole scanned project as a directory/file/function hierarchy."""

    root_name: str
    root: DirectoryNode

    def walk_files(self) -> Iterator[FileNode]:
        return self.root.walk_files()

    def walk_functions(self) -> Iterator[tuple[FileNode, FunctionNode]]:
        for f in self.walk_files():
            for fn in f.walk_functions():
                yield f, fn

    def directories(self) -> list[DirectoryNode]:
        """All retained directories except the root."""
        return [d for d in self.root.walk_directories() if d.path]


def build_code_tree(files: list[FileNode], root_name: str) -> CodeTree:
    """Reconstruct the directory hierarchy from file paths.

    Children are sorted lexicographically; directories without any
    descendant file never materialize. Duplicate paths are fatal.
    """
    seen: set[str] = set()
    for f in files:
        check_relative_path(f.path)
        if f.path in seen:
            raise DuplicatePathError(f"duplicate file path: {f.path!r}")
        seen.add(f.path)

    root = DirectoryNode(name=root_name, path="")
    by_path: dict[str, DirectoryNode] = {"": root}

    def directory_for(path: str) -> DirectoryNode:
        node = by_path.get(path)
        if node is not None:
            return node
        parent_path, _, name = path.rpartition("/")
        parent = directory_for(parent_path)
        node = DirectoryNode(name=name, path=path)
        parent.directories.append(node)
        by_path[path] = node
        return node

    for f in sorted(files, key=lambda f: f.path):
        dir_path = f.path.rpartition("/")[0]
        directory_for(dir_path).files.append(f)

    for node in by_path.values():
        node.directories.sort(key=lambda d: d.name)
        node.files.sort(key=lambda f: f.path)
    return CodeTree(root_name=root_name, root=root)


def check_nesting(file_node: FileNode) -> list[str]:
    """Nesting soundness: every descendant interval inside its parent's.

    Returns human-readable violation strings (empty when sound).
    """
    problems: list[str] = []

    def visit(fn: FunctionNode) -> None:
        for child in fn.children:
            if not fn.contains(child):
                problems.append(
                    f"{child.id} [{child.start_line}-{child.end_line}] not "
                    f"inside {fn.id} [{fn.start_line}-{fn.end_line}]")
            visit(child)

    for fn in file_node.functions:
        visit(fn)
    return problems
