"""Local, declaration-based type tags for expression nodes.

Only what can be proven from literals and local declarations gets a tag;
everything else is ``unknown`` and never satisfies a numeric precondition.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .expr import (
    BOOLEAN,
    CAST,
    DOUBLE,
    FLOAT,
    INFIX,
    INT,
    LITERAL,
    LONG,
    NAME,
    NUMERIC_TAGS,
    PAREN,
    RELATIONAL_OPS,
    SHIFT_OPS,
    STRING,
    UNARY,
    UNKNOWN,
    ExprNode,
)
from .lexer import (
    BOOL_LITERAL,
    FLOAT_LITERAL,
    INT_LITERAL,
    STRING_LITERAL,
    Token,
)
from .structure import MethodScope

_DECLARED = {
    "int": INT,
    "long": LONG,
    "float": FLOAT,
    "double": DOUBLE,
    "boolean": BOOLEAN,
    "String": STRING,
    "java.lang.String": STRING,
}
_RANK = {INT: 0, LONG: 1, FLOAT: 2, DOUBLE: 3}


def literal_type(token: Token) -> str:
    if token.category == INT_LITERAL:
        return LONG if token.text[-1] in "lL" else INT
    if token.category == FLOAT_LITERAL:
        return FLOAT if token.text[-1] in "fF" else DOUBLE
    if token.category == STRING_LITERAL:
        return STRING
    if token.category == BOOL_LITERAL:
        return BOOLEAN
    return UNKNOWN


def declared_tag(declared_type: str) -> str:
    return _DECLARED.get(declared_type, UNKNOWN)


def promote(*tags: str) -> str:
    """Binary numeric promotion; unknown if any operand is not numeric."""
    if not tags or any(t not in NUMERIC_TAGS for t in tags):
        return UNKNOWN
    return max(tags, key=_RANK.__getitem__)


def type_of(node: ExprNode, scope: Optional[MethodScope], tokens: Sequence[Token]) -> str:
    """Type tag of ``node``; also stored on ``node.type_tag``."""
    tag = _type_of(node, scope, tokens)
    node.type_tag = tag
    return tag


def _type_of(node: ExprNode, scope, tokens) -> str:
    kind = node.kind
    if kind == LITERAL:
        return literal_type(tokens[node.start])
    if kind == NAME:
        if scope is None:
            return UNKNOWN
        tok = tokens[node.start]
        decl = scope.resolve(tok.text, node.start)
        return declared_tag(decl.declared_type) if decl is not None else UNKNOWN
    if kind == PAREN:
        return type_of(node.children[0], scope, tokens)
    if kind == UNARY:
        inner = type_of(node.children[0], scope, tokens)
        if node.op == "!":
            return BOOLEAN if inner == BOOLEAN else UNKNOWN
        if node.op == "~":
            return inner if inner in (INT, LONG) else UNKNOWN
        return inner if inner in NUMERIC_TAGS else UNKNOWN
    if kind == CAST:
        type_of(node.children[1], scope, tokens)
        return _DECLARED.get(node.op, UNKNOWN) if node.op in ("int", "long", "float", "double") else UNKNOWN
    if kind == INFIX:
        tags = [type_of(c, scope, tokens) for c in node.children]
        op = node.op
        if op in RELATIONAL_OPS or op in ("&&", "||", "instanceof"):
            return BOOLEAN
        if op == "+" and STRING in tags:
            return STRING
        if op in SHIFT_OPS:
            left = tags[0]
            return left if left in (INT, LONG) and all(t in (INT, LONG) for t in tags) else UNKNOWN
        if op in ("&", "|", "^"):
            if all(t == BOOLEAN for t in tags):
                return BOOLEAN
            if all(t in (INT, LONG) for t in tags):
                return promote(*tags)
            return UNKNOWN
        return promote(*tags)
    for child in node.children:
        if not child.is_opaque:
            type_of(child, scope, tokens)
    return UNKNOWN
