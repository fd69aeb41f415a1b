"""Ingestion of pre-parsed ASTs in the ESTree JSON interchange shape.

Decouples the pipeline from the built-in parser: any tool emitting
ESTree-compatible JSON (nodes with ``type`` and ``loc`` carrying
1-based lines / 0-based columns) can feed the same extraction path.
"""

from __future__ import annotations

_FUNCTION_TYPES = frozenset(
    {"FunctionDeclaration", "FunctionExpression", "ArrowFunctionExpression"}
)

# Dict-valued fields that are metadata on any node, never child nodes.
_METADATA_KEYS = frozenset({"loc", "range", "regex", "extra"})

# Node types whose ``value`` field holds plain data, not a child node
# (a Literal's regex value serializes as an empty object).
_SCALAR_VALUE_TYPES = frozenset({"TemplateElement", "Literal"})


class EstreeError(Exception):
    """Malformed ESTree document; ``node_path`` names the offending node."""

    def __init__(self, message: str, node_path: str):
        super().__init__(f"{message} at {node_path or '<root>'}")
        self.node_path = node_path


def _has_full_loc(node: dict) -> bool:
    loc = node.get("loc")
    if not isinstance(loc, dict):
        return False
    for end in ("start", "end"):
        pos = loc.get(end)
        if not isinstance(pos, dict):
            return False
        if not isinstance(pos.get("line"), int) or not isinstance(
                pos.get("column"), int):
            return False
    return True


def load_estree_json(doc) -> dict:
    """Validate an ESTree JSON document and return it as the syntax tree.

    Every node must carry a ``type``; the Program node and every
    function-bearing node must carry complete ``loc`` data. Violations
    raise EstreeError naming the node's path (e.g. ``body[0]``).
    """
    if not isinstance(doc, dict):
        raise EstreeError("document is not a JSON object", "")
    if doc.get("type") != "Program":
        raise EstreeError("root node is not a Program", "")
    if not _has_full_loc(doc):
        raise EstreeError("missing or incomplete loc", "")

    stack: list[tuple[dict, str]] = [(doc, "")]
    while stack:
        node, path = stack.pop()
        type_ = node.get("type")
        if not isinstance(type_, str):
            raise EstreeError("missing type", path)
        if type_ in _FUNCTION_TYPES and not _has_full_loc(node):
            raise EstreeError("missing or incomplete loc on function node",
                              path)
        for key, value in node.items():
            if key in _METADATA_KEYS:
                continue
            if key == "value" and type_ in _SCALAR_VALUE_TYPES:
                continue
            child_path = f"{path}.{key}" if path else key
            if isinstance(value, dict):
                stack.append((value, child_path))
            elif isinstance(value, list):
                for i, item in enumerate(value):
                    if isinstance(item, dict):
                        stack.append((item, f"{child_path}[{i}]"))
    return doc
