"""Self-contained ECMAScript parsing (tokenizer + ESTree-shaped parser)."""

from .parser import ParseError, parse_source
from .tokens import Lexer, Token, TokenizeError

__all__ = ["Lexer", "ParseError", "Token", "TokenizeError", "parse_source"]
