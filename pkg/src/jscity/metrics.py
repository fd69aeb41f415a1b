"""Per-function LOC/NOV metrics and project-level statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .model import NAMED, PARSE_OK, CodeTree, FunctionNode


class MetricsError(Exception):
    pass


@dataclass(frozen=True)
class FunctionMetrics:
    """Line-span and variable-count measures for one function.

    loc_total is the full physical span; loc_own subtracts the nested
    functions' spans (clamped at zero for pathological same-line
    nesting); nov_agg folds every nested function's variables into the
    enclosing one, which is what keeps parent footprints at least as
    wide as their children's.
    """

    loc_total: int
    loc_own: int
    nov_own: int
    nov_agg: int

    def to_dict(self) -> dict:
        return {"loc_total": self.loc_total, "loc_own": self.loc_own,
                "nov_own": self.nov_own, "nov_agg": self.nov_agg}


@dataclass(frozen=True)
class ProjectStats:
    total_loc: int
    directory_count: int
    file_count: int
    named_function_count: int
    anonymous_function_count: int
    skipped_file_count: int

    def to_dict(self) -> dict:
        return {
            "total_loc": self.total_loc,
            "directory_count": self.directory_count,
            "file_count": self.file_count,
            "named_function_count": self.named_function_count,
            "anonymous_function_count": self.anonymous_function_count,
            "skipped_file_count": self.skipped_file_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProjectStats":
        return cls(
            total_loc=int(data["total_loc"]),
            directory_count=int(data["directory_count"]),
            file_count=int(data["file_count"]),
            named_function_count=int(data["named_function_count"]),
            anonymous_function_count=int(data["anonymous_function_count"]),
            skipped_file_count=int(data["skipped_file_count"]),
        )


def _compute_for(fn: FunctionNode, index: dict[str, FunctionMetrics]) -> FunctionMetrics:
    children = [_compute_for(child, index) for child in fn.children]
    loc_total = fn.end_line - fn.start_line + 1
    loc_own = max(loc_total - sum(c.loc_total for c in children), 0)
    nov_agg = fn.own_var_count + sum(c.nov_agg for c in children)
    metrics = FunctionMetrics(loc_total=loc_total, loc_own=loc_own,
                              nov_own=fn.own_var_count, nov_agg=nov_agg)
    index[fn.id] = metrics
    return metrics


def compute_metrics(tree: CodeTree) -> dict[str, FunctionMetrics]:
    """Post-order metrics for every function in the tree, keyed by id."""
    index: dict[str, FunctionMetrics] = {}
    for file_node in tree.walk_files():
        for fn in file_node.functions:
            _compute_for(fn, index)
    return index


def summarize(tree: CodeTree,
              index: dict[str, FunctionMetrics]) -> ProjectStats:
    """Project statistics: line totals, file/directory counts, and the
    named/anonymous function split."""
    total_loc = 0
    file_count = 0
    skipped = 0
    named = 0
    anonymous = 0
    for file_node in tree.walk_files():
        if file_node.parse_status != PARSE_OK:
            skipped += 1
            continue
        file_count += 1
        total_loc += file_node.line_count
        for fn in file_node.walk_functions():
            if fn.id not in index:
                raise MetricsError(f"no metrics entry for function {fn.id}")
            if fn.naming == NAMED:
                named += 1
            else:
                anonymous += 1
    return ProjectStats(
        total_loc=total_loc,
        directory_count=len(tree.directories()),
        file_count=file_count,
        named_function_count=named,
        anonymous_function_count=anonymous,
        skipped_file_count=skipped,
    )
