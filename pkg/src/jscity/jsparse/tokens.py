"""Lexical scanner for ECMAScript source text.

Produces a forward-only token stream with (line, column) positions
(lines 1-based, columns 0-based). Regular-expression literals and
template continuations are context-sensitive; the scanner resolves
``/`` vs regex with the previous-significant-token heuristic and lets
the parser re-enter template lexing at a ``}``.
"""

from __future__ import annotations

import re

KEYWORDS = frozenset(
    """break case catch class const continue debugger default delete do else
    enum export extends false finally for function if import in instanceof
    new null return super switch this throw true try typeof var void while
    with yield let static await async get set of as from""".split()
)

# Words that can never end an expression, so a following `/` starts a
# regex literal. The parser corrects the remaining ambiguous cases
# (after `)`, `]`, `}`) by re-lexing, so this only needs to be safe.
_REGEX_AFTER_NAME = frozenset(
    """return typeof instanceof in of new delete void throw case do else
    yield await""".split()
)

# Punctuators after which `/` means division until the parser says otherwise.
_DIVIDE_AFTER_PUNCT = frozenset({")", "]", "}", "++", "--"})

_PUNCTUATORS = [
    ">>>=",
    "...", "===", "!==", ">>>", "**=", "<<=", ">>=", "&&=", "||=", "??=",
    "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "**",
    "{", "}", "(", ")", "[", "]", ";", ",", "<", ">", "+", "-", "*", "/",
    "%", "&", "|", "^", "!", "~", "?", ":", "=", ".", "@",
]

_NUMBER = r"""
    0[xX][0-9a-fA-F][0-9a-fA-F_]*n?
  | 0[oO][0-7][0-7_]*n?
  | 0[bB][01][01_]*n?
  | (?:\d[\d_]*(?:\.[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d+)?n?
"""

# `\\.` relies on DOTALL so escaped newlines (line continuations) match.
_STRING = r"""
    '(?:[^'\\\r\n]|\\\r\n|\\.)*'
  | "(?:[^"\\\r\n]|\\\r\n|\\.)*"
"""

_MASTER = re.compile(
    r"""
    (?P<ws>(?:\s|//[^\n]*|/\*.*?\*/)+)
  | (?P<name>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<num>%s)
  | (?P<str>%s)
  | (?P<privatename>\#[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<punct>%s)
    """
    % (_NUMBER, _STRING, "|".join(re.escape(p) for p in _PUNCTUATORS)),
    re.VERBOSE | re.DOTALL,
)

# ?. followed by a digit is a ternary, not optional chaining: a?.5:b
_OPTIONAL_DOT_DIGIT = re.compile(r"\?\.\d")

_ESCAPES = {
    "n": "\n", "t": "\t", "r": "\r", "b": "\b", "f": "\f", "v": "\v",
    "0": "\0", "'": "'", '"': '"', "\\": "\\", "`": "`",
}


class TokenizeError(Exception):
    """Lexical error with a 1-based line and 0-based column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} ({line}:{column})")
        self.message = message
        self.line = line
        self.column = column


class Token:
    """One lexical token. ``kind`` is one of name, privatename, num, str,
    regex, template, punct, eof. Template tokens carry head/tail flags."""

    __slots__ = (
        "kind", "value", "start", "end", "line", "col",
        "end_line", "end_col", "nl_before", "head", "tail",
    )

    def __init__(self, kind, value, start, end, line, col, end_line, end_col,
                 nl_before, head=False, tail=False):
        self.kind = kind
        self.value = value
        self.start = start
        self.end = end
        self.line = line
        self.col = col
        self.end_line = end_line
        self.end_col = end_col
        self.nl_before = nl_before
        self.head = head
        self.tail = tail

    def __repr__(self):  # pragma: no cover - debug aid
        return f"Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


def unescape_string(raw: str) -> str:
    """Cooked value of a string literal token (including its quotes)."""
    body = raw[1:-1]
    if "\\" not in body:
        return body
    out: list[str] = []
    i = 0
    n = len(body)
    while i < n:
        c = body[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        i += 1
        e = body[i]
        if e == "\r":
            i += 1
            if i < n and body[i] == "\n":
                i += 1
            continue
        if e == "\n":
            i += 1
            continue
        if e == "x":
            out.append(chr(int(body[i + 1:i + 3], 16)))
            i += 3
            continue
        if e == "u":
            if body[i + 1] == "{":
                close = body.index("}", i)
                out.append(chr(int(body[i + 2:close], 16)))
                i = close + 1
            else:
                out.append(chr(int(body[i + 1:i + 5], 16)))
                i += 5
            continue
        out.append(_ESCAPES.get(e, e))
        i += 1
    return "".join(out)


def number_value(raw: str):
    """Cooked numeric value of a numeric literal token."""
    text = raw.replace("_", "")
    if text.endswith("n"):
        return int(text[:-1], 0)
    low = text.lower()
    if low.startswith(("0x", "0o", "0b")):
        return int(text, 0)
    value = float(text)
    if value.is_integer() and abs(value) < 2**53 and "e" not in low and "." not in low:
        return int(value)
    return value


class Lexer:
    """Forward-only scanner with checkpoint/rewind support.

    State is four integers plus the previous significant token, so the
    parser can snapshot cheaply for arrow-function backtracking and
    template continuations.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.prev: Token | None = None
        if text.startswith("#!"):  # hashbang line
            nl = text.find("\n")
            self.pos = len(text) if nl < 0 else nl

    # -- checkpointing ----------------------------------------------------

    def save(self):
        return (self.pos, self.line, self.line_start, self.prev)

    def restore(self, state) -> None:
        self.pos, self.line, self.line_start, self.prev = state

    # -- helpers -----------------------------------------------------------

    def _advance_lines(self, start: int, end: int) -> None:
        n = self.text.count("\n", start, end)
        if n:
            self.line += n
            self.line_start = self.text.rindex("\n", start, end) + 1

    def _pos_pair(self, offset: int) -> tuple[int, int]:
        return self.line, offset - self.line_start

    def _error(self, message: str, offset: int) -> TokenizeError:
        line, col = self.line, offset - self.line_start
        return TokenizeError(message, line, col)

    def _make(self, kind, value, start, end, line, col, nl_before, **flags) -> Token:
        end_line, end_col = self._pos_pair(end)
        tok = Token(kind, value, start, end, line, col, end_line, end_col,
                    nl_before, **flags)
        self.prev = tok
        return tok

    # -- main entry ---------------------------------------------------------

    def next_token(self) -> Token:
        text = self.text
        nl_before = False
        while True:
            if self.pos >= len(text):
                line, col = self._pos_pair(self.pos)
                return self._make("eof", "", self.pos, self.pos, line, col, nl_before)
            if text[self.pos] == "`":
                return self.read_template_part(nl_before)
            m = _MASTER.match(text, self.pos)
            if m is None:
                return self._scan_exotic_identifier(nl_before)
            kind = m.lastgroup
            start, end = m.span()
            if kind == "ws":
                if "\n" in m.group():
                    nl_before = True
                self._advance_lines(start, end)
                self.pos = end
                continue
            break

        if kind == "punct":
            value = m.group()
            if value in ("/", "/="):
                # Terminated block comments are whitespace, so `/` followed
                # by `*` here can only be an unterminated comment.
                if text[start + 1:start + 2] == "*":
                    raise self._error("unterminated comment", start)
                if self._regex_allowed():
                    return self._read_regex(nl_before)
            if value == "?." and _OPTIONAL_DOT_DIGIT.match(text, start):
                value = "?"
                end = start + 1
            line, col = self._pos_pair(start)
            self.pos = end
            return self._make("punct", value, start, end, line, col, nl_before)

        if kind == "str":
            line, col = self._pos_pair(start)
            self._advance_lines(start, end)  # escaped line continuations
            self.pos = end
            return self._make("str", m.group(), start, end, line, col, nl_before)

        value = m.group()
        line, col = self._pos_pair(start)
        self.pos = end
        if kind == "num" and text[end:end + 1] and (
                text[end].isalpha() or text[end] in "_$"):
            raise self._error(f"invalid numeric literal {value!r}", start)
        return self._make(kind, value, start, end, line, col, nl_before)

    def _scan_exotic_identifier(self, nl_before: bool) -> Token:
        """Identifiers outside the ASCII fast path (Unicode letters)."""
        text = self.text
        start = self.pos
        c = text[start]
        if c in "'\"":
            raise self._error("unterminated string literal", start)
        if not c.isidentifier():
            raise self._error(f"unexpected character {c!r}", start)
        i = start + 1
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isalnum() or ch in "_$‌‍" or ("a" + ch).isidentifier():
                i += 1
            else:
                break
        line, col = self._pos_pair(start)
        self.pos = i
        return self._make("name", text[start:i], start, i, line, col, nl_before)

    # -- context-sensitive pieces -------------------------------------------

    def _regex_allowed(self) -> bool:
        prev = self.prev
        if prev is None:
            return True
        if prev.kind == "punct":
            return prev.value not in _DIVIDE_AFTER_PUNCT
        if prev.kind == "name":
            return prev.value in _REGEX_AFTER_NAME
        if prev.kind == "template":
            return not prev.tail
        return False

    def _read_regex(self, nl_before: bool) -> Token:
        text = self.text
        start = self.pos
        line, col = self._pos_pair(start)
        i = start + 1
        in_class = False
        n = len(text)
        while True:
            if i >= n or text[i] == "\n":
                raise self._error("unterminated regular expression", start)
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if in_class:
                if c == "]":
                    in_class = False
            elif c == "[":
                in_class = True
            elif c == "/":
                i += 1
                break
            i += 1
        while i < n and (text[i].isalpha() or text[i] in "_$"):
            i += 1
        self.pos = i
        return self._make("regex", text[start:i], start, i, line, col, nl_before)

    def relex_regex(self, tok: Token) -> Token:
        """Re-lex a `/` or `/=` punctuator as a regex literal (the parser
        knows it sits at an expression position)."""
        self.pos = tok.start
        self.line = tok.line
        self.line_start = tok.start - tok.col
        return self._read_regex(tok.nl_before)

    def relex_divide(self, tok: Token) -> Token:
        """Re-lex a regex token as a `/` or `/=` operator (the parser knows
        it sits at an operator position)."""
        value = "/=" if tok.value.startswith("/=") else "/"
        self.pos = tok.start + len(value)
        self.line = tok.line
        self.line_start = tok.start - tok.col
        return self._make("punct", value, tok.start, self.pos, tok.line,
                          tok.col, tok.nl_before)

    def read_template_part(self, nl_before: bool = False) -> Token:
        """Lex a template segment starting at ``self.pos`` (a `` ` `` for a
        head, a ``}`` for a continuation). ``head``/``tail`` flags mark the
        segment's role; value includes the delimiters."""
        text = self.text
        start = self.pos
        opener = text[start]
        head = opener == "`"
        line, col = self._pos_pair(start)
        i = start + 1
        n = len(text)
        while True:
            if i >= n:
                raise self._error("unterminated template literal", start)
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if c == "`":
                i += 1
                tail = True
                break
            if c == "$" and i + 1 < n and text[i + 1] == "{":
                i += 2
                tail = False
                break
            i += 1
        self._advance_lines(start, i)
        self.pos = i
        return self._make("template", text[start:i], start, i, line, col,
                          nl_before, head=head, tail=tail)
