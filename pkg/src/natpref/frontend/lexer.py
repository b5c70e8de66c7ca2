"""Lossless Java lexer.

Every byte of the input ends up in exactly one token, so joining the token
texts gives back the original source. Comments and whitespace are kept as
trivia tokens; the modeled token stream filters them out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List

IDENTIFIER = "identifier"
KEYWORD = "keyword"
OPERATOR = "operator"
SEPARATOR = "separator"
INT_LITERAL = "int_literal"
FLOAT_LITERAL = "float_literal"
STRING_LITERAL = "string_literal"
CHAR_LITERAL = "char_literal"
BOOL_LITERAL = "bool_literal"
NULL_LITERAL = "null_literal"
COMMENT = "comment"
WHITESPACE = "whitespace"

TRIVIA = frozenset({COMMENT, WHITESPACE})
LITERALS = frozenset(
    {INT_LITERAL, FLOAT_LITERAL, STRING_LITERAL, CHAR_LITERAL, BOOL_LITERAL, NULL_LITERAL}
)

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized this
    throw throws transient try void volatile while""".split()
)

PRIMITIVE_TYPES = frozenset(
    {"boolean", "byte", "char", "short", "int", "long", "float", "double"}
)

# Longest first so that maximal munch falls out of regex alternation order.
OPERATORS = sorted(
    """>>>= <<= >>= >>> ... -> :: ++ -- && || == != <= >= += -= *= /= &= |= ^= %=
    << >> = > < ! ~ ? : + - * / & | ^ % @""".split(),
    key=len,
    reverse=True,
)
SEPARATORS = "(){}[];,."

_EXP = r"(?:[eE][+-]?[0-9][0-9_]*)"
_HEX_DIGITS = r"[0-9a-fA-F][0-9a-fA-F_]*"
_FLOAT_RE = (
    r"(?:0[xX](?:" + _HEX_DIGITS + r")?(?:\.(?:" + _HEX_DIGITS + r")?)?[pP][+-]?[0-9]+[fFdD]?"
    r"|[0-9][0-9_]*\.(?:[0-9][0-9_]*)?" + _EXP + r"?[fFdD]?"
    r"|\.[0-9][0-9_]*" + _EXP + r"?[fFdD]?"
    r"|[0-9][0-9_]*" + _EXP + r"[fFdD]?"
    r"|[0-9][0-9_]*[fFdD])"
)
_INT_RE = (
    r"(?:0[xX]" + _HEX_DIGITS + r"|0[bB][01][01_]*|[0-9][0-9_]*)[lL]?"
)

_TOKEN_RE = re.compile(
    "|".join(
        [
            r"(?P<ws>[ \t\f\r\n]+)",
            r"(?P<line_comment>//[^\r\n]*)",
            r"(?P<block_comment>/\*.*?\*/)",
            r"(?P<text_block>\"\"\"[ \t\f]*\r?\n(?:[^\\]|\\.)*?\"\"\")",
            r"(?P<string>\"(?:[^\"\\\r\n]|\\.)*\")",
            r"(?P<char>'(?:[^'\\\r\n]|\\.)+')",
            r"(?P<float>" + _FLOAT_RE + r")(?![0-9A-Za-z_$])",
            r"(?P<int>" + _INT_RE + r")(?![0-9A-Za-z_$])",
            r"(?P<word>[A-Za-z_$\u0080-\uffff][A-Za-z0-9_$\u0080-\uffff]*)",
            r"(?P<op>" + "|".join(re.escape(o) for o in OPERATORS) + r")",
            r"(?P<sep>[" + re.escape(SEPARATORS) + r"])",
        ]
    ),
    re.DOTALL,
)


class LexError(ValueError):
    """Raised for unterminated literals/comments or stray characters."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at {line}:{col}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    category: str
    text: str
    line: int
    col: int

    @property
    def is_trivia(self) -> bool:
        return self.category in TRIVIA

    @property
    def end_line(self) -> int:
        return self.line + self.text.count("\n")


def _category(kind: str, text: str) -> str:
    if kind == "ws":
        return WHITESPACE
    if kind in ("line_comment", "block_comment"):
        return COMMENT
    if kind in ("string", "text_block"):
        return STRING_LITERAL
    if kind == "char":
        return CHAR_LITERAL
    if kind == "float":
        return FLOAT_LITERAL
    if kind == "int":
        return INT_LITERAL
    if kind == "op":
        return OPERATOR
    if kind == "sep":
        return SEPARATOR
    if text in ("true", "false"):
        return BOOL_LITERAL
    if text == "null":
        return NULL_LITERAL
    if text in KEYWORDS:
        return KEYWORD
    return IDENTIFIER


def tokenize(source: str) -> List[Token]:
    """Split Java source into tokens, trivia included.

    Raises
    ------
    LexError
        On an unterminated string, char literal or block comment, or on a
        character that cannot start any Java token.
    """
    tokens: List[Token] = []
    pos = 0
    line, col = 1, 1
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None or m.end() == pos:
            ch = source[pos]
            if source.startswith("/*", pos):
                raise LexError("unterminated comment", line, col)
            if ch in "\"'":
                raise LexError("unterminated literal", line, col)
            raise LexError(f"unexpected character {ch!r}", line, col)
        text = m.group()
        if text == "/" and source.startswith("/*", pos):
            raise LexError("unterminated comment", line, col)
        tokens.append(Token(_category(m.lastgroup, text), text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    return tokens


def render(tokens: Iterable[Token]) -> str:
    return "".join(t.text for t in tokens)


def significant(tokens: Iterable[Token]) -> List[Token]:
    """Tokens that the language models see (no comments or whitespace)."""
    return [t for t in tokens if not t.is_trivia]
