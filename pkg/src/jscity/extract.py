"""Function-forest extraction from an ESTree-shaped syntax tree.

Walks a tree produced by either ingestion route and builds the FileNode
function hierarchy: lexical nesting, naming classification, per-scope
variable-declarator counts, and parameter counts.
"""

from __future__ import annotations

from .model import (
    ANONYMOUS,
    KIND_ARROW,
    KIND_DECLARATION,
    KIND_EXPRESSION,
    KIND_METHOD,
    NAMED,
    PARSE_OK,
    FileNode,
    FunctionNode,
)

_FUNCTION_TYPES = frozenset(
    {"FunctionDeclaration", "FunctionExpression", "ArrowFunctionExpression"}
)

_SKIP_KEYS = frozenset({"loc", "range", "regex", "extra"})


def count_bound_names(pattern: dict | None) -> int:
    """Identifiers bound by a binding pattern (one per bound name)."""
    if pattern is None:
        return 0
    type_ = pattern.get("type")
    if type_ == "Identifier":
        return 1
    if type_ == "ObjectPattern":
        total = 0
        for prop in pattern.get("properties", []):
            if prop.get("type") == "RestElement":
                total += count_bound_names(prop.get("argument"))
            else:
                total += count_bound_names(prop.get("value"))
        return total
    if type_ == "ArrayPattern":
        return sum(count_bound_names(el) for el in pattern.get("elements", [])
                   if el is not None)
    if type_ == "AssignmentPattern":
        return count_bound_names(pattern.get("left"))
    if type_ == "RestElement":
        return count_bound_names(pattern.get("argument"))
    return 0  # member expressions and other non-binding targets


def _is_method_wrapper(node: dict) -> bool:
    type_ = node.get("type")
    if type_ == "MethodDefinition":
        return True
    if type_ == "Property":
        return bool(node.get("method")) or node.get("kind") in ("get", "set")
    return False


def _key_name(key: dict | None) -> str | None:
    if key is None:
        return None
    type_ = key.get("type")
    if type_ == "Identifier":
        return key.get("name")
    if type_ == "PrivateIdentifier":
        return "#" + str(key.get("name"))
    if type_ == "Literal":
        value = key.get("value")
        return None if value is None else str(value)
    return None


def _loc_span(node: dict) -> tuple[int, int, int, int]:
    loc = node["loc"]
    return (loc["start"]["line"], loc["start"]["column"],
            loc["end"]["line"], loc["end"]["column"])


def _child_nodes(node: dict) -> list[dict]:
    """Direct child nodes in source order (sorted by start position, so
    traversal order is independent of dict key order)."""
    children: list[dict] = []
    node_type = node.get("type")
    for key, value in node.items():
        if key in _SKIP_KEYS:
            continue
        if key == "value" and node_type in ("TemplateElement", "Literal"):
            continue
        if isinstance(value, dict):
            children.append(value)
        elif isinstance(value, list):
            children.extend(v for v in value if isinstance(v, dict))

    def sort_key(child: dict):
        loc = child.get("loc")
        if isinstance(loc, dict):
            start = loc.get("start", {})
            return (0, start.get("line", 0), start.get("column", 0))
        return (1, 0, 0)

    children.sort(key=sort_key)
    return children


class _Extractor:
    def __init__(self, path: str, count_params: bool):
        self.path = path
        self.count_params = count_params
        self.counter = 0
        self.roots: list[FunctionNode] = []
        self.stack: list[FunctionNode] = []
        self.class_names: list[str | None] = []

    def visit(self, node: dict) -> None:
        type_ = node.get("type")
        if type_ in _FUNCTION_TYPES:
            self._enter_function(node, wrapper=None)
            return
        if _is_method_wrapper(node):
            value = node.get("value")
            if isinstance(value, dict) and value.get("type") in _FUNCTION_TYPES:
                if node.get("computed"):
                    key = node.get("key")
                    if isinstance(key, dict):
                        self.visit(key)
                self._enter_function(value, wrapper=node)
                return
        if type_ == "VariableDeclarator" and self.stack:
            self.stack[-1].own_var_count += count_bound_names(node.get("id"))
        if type_ in ("ClassDeclaration", "ClassExpression"):
            class_id = node.get("id")
            name = class_id.get("name") if isinstance(class_id, dict) else None
            self.class_names.append(name)
            for child in _child_nodes(node):
                self.visit(child)
            self.class_names.pop()
            return
        for child in _child_nodes(node):
            self.visit(child)

    def _enter_function(self, fn_node: dict, wrapper: dict | None) -> None:
        span_node = wrapper if wrapper is not None else fn_node
        start_line, start_col, end_line, end_col = _loc_span(span_node)
        kind, name = self._classify(fn_node, wrapper)
        params = fn_node.get("params", [])
        own_vars = 0
        if self.count_params:
            own_vars = sum(count_bound_names(p) for p in params)
        fn = FunctionNode(
            id=f"{self.path}#{self.counter}",
            name=name,
            kind=kind,
            naming=NAMED if name else ANONYMOUS,
            start_line=start_line,
            end_line=end_line,
            start_col=start_col,
            end_col=end_col,
            own_var_count=own_vars,
            param_count=len(params),
        )
        self.counter += 1
        if self.stack:
            self.stack[-1].children.append(fn)
        else:
            self.roots.append(fn)
        self.stack.append(fn)
        for param in params:
            if isinstance(param, dict):
                self.visit(param)
        body = fn_node.get("body")
        if isinstance(body, dict):
            self.visit(body)
        self.stack.pop()

    def _classify(self, fn_node: dict, wrapper: dict | None) -> tuple[str, str | None]:
        if wrapper is not None:
            if wrapper.get("type") == "MethodDefinition" \
                    and wrapper.get("kind") == "constructor":
                name = self.class_names[-1] if self.class_names else None
                return KIND_METHOD, name or _key_name(wrapper.get("key"))
            if wrapper.get("computed"):
                return KIND_METHOD, None
            return KIND_METHOD, _key_name(wrapper.get("key"))
        type_ = fn_node.get("type")
        if type_ == "ArrowFunctionExpression":
            return KIND_ARROW, None
        fn_id = fn_node.get("id")
        name = fn_id.get("name") if isinstance(fn_id, dict) else None
        if type_ == "FunctionDeclaration":
            return KIND_DECLARATION, name
        return KIND_EXPRESSION, name


def program_line_count(tree: dict) -> int:
    """Physical line count derived from the Program span (which covers
    the whole source, so an end at column 0 means a trailing newline)."""
    loc = tree["loc"]
    end = loc["end"]
    count = end["line"]
    if end["column"] == 0:
        count -= 1
    return max(count, 0)


def extract_functions(tree: dict, path: str,
                      count_params: bool = False) -> FileNode:
    """Build a FileNode whose function forest mirrors lexical nesting."""
    extractor = _Extractor(path, count_params)
    extractor.visit(tree)
    return FileNode(
        path=path,
        functions=extractor.roots,
        parse_status=PARSE_OK,
        error_message=None,
        line_count=program_line_count(tree),
    )
