"""Java expression trees and a precedence-climbing parser.

Nodes point into the lossless token list of their file through half-open
``[start, end)`` token indices, so rendering a node is a slice join and keeps
the original whitespace and comments. Chains of one left-associative binary
operator (``a + b + c``) become a single n-ary infix node, the way JDT
represents extended operands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .lexer import (
    IDENTIFIER,
    KEYWORD,
    LITERALS,
    PRIMITIVE_TYPES,
    Token,
    tokenize,
)

# node kinds
INFIX = "infix"
PAREN = "paren"
LITERAL = "literal"
NAME = "name"
CALL = "call"
INDEX = "index"
FIELD_ACCESS = "field_access"
UNARY = "unary"
CAST = "cast"
ASSIGN = "assign"
CONDITIONAL = "conditional"
NEW = "new"
ARRAY_INIT = "array_init"
TYPE = "type"
LAMBDA = "lambda"
OTHER = "other"

# kinds whose insides are never transformed
OPAQUE_KINDS = frozenset({LAMBDA, OTHER, TYPE})

# type tags
INT = "int"
LONG = "long"
FLOAT = "float"
DOUBLE = "double"
BOOLEAN = "boolean"
STRING = "string"
UNKNOWN = "unknown"
NUMERIC_TAGS = (INT, LONG, FLOAT, DOUBLE)

BINARY_PRECEDENCE: Dict[str, int] = {
    "||": 3,
    "&&": 4,
    "|": 5,
    "^": 6,
    "&": 7,
    "==": 8,
    "!=": 8,
    "<": 9,
    ">": 9,
    "<=": 9,
    ">=": 9,
    "instanceof": 9,
    "<<": 10,
    ">>": 10,
    ">>>": 10,
    "+": 11,
    "-": 11,
    "*": 12,
    "/": 12,
    "%": 12,
}
ASSIGN_OPS = frozenset(
    "= += -= *= /= %= &= |= ^= <<= >>= >>>=".split()
)
PREFIX_OPS = frozenset({"+", "-", "++", "--", "!", "~"})
ARITH_OPS = frozenset({"+", "-", "*", "/", "%"})
RELATIONAL_OPS = frozenset({"==", "!=", "<", "<=", ">", ">="})
SHIFT_OPS = frozenset({"<<", ">>", ">>>"})
BITWISE_OPS = frozenset({"&", "|", "^"})
LOGICAL_OPS = frozenset({"&&", "||"})

_CAST_FOLLOWERS_REF = frozenset({"(", "!", "~", "this", "new", "super"})


class ParseError(ValueError):
    pass


@dataclass(eq=False)
class ExprNode:
    """One expression node.

    ``op`` holds the operator for infix/unary/assign nodes, the method name
    for calls and the member name for field accesses. ``op_tokens`` are the
    token indices of the operator occurrences of an infix node, one fewer
    than its children.
    """

    kind: str
    start: int
    end: int
    children: List["ExprNode"] = field(default_factory=list)
    op: Optional[str] = None
    op_tokens: List[int] = field(default_factory=list)
    postfix: bool = False
    type_tag: str = UNKNOWN
    parent: Optional["ExprNode"] = field(default=None, repr=False)

    def walk(self):
        """Pre-order traversal; does not descend into opaque nodes."""
        yield self
        if self.kind in OPAQUE_KINDS:
            return
        for child in self.children:
            yield from child.walk()

    def text(self, tokens: Sequence[Token]) -> str:
        return "".join(t.text for t in tokens[self.start : self.end])

    @property
    def is_opaque(self) -> bool:
        return self.kind in OPAQUE_KINDS


def _link(node: ExprNode) -> ExprNode:
    for child in node.children:
        child.parent = node
    return node


class ExpressionParser:
    """Parses expressions out of a window of significant tokens.

    Parameters
    ----------
    tokens : list of Token
        The whole file, trivia included.
    sig : list of int
        Indices into ``tokens`` of the significant tokens to parse from.
    """

    def __init__(self, tokens: Sequence[Token], sig: Sequence[int]):
        self.tokens = tokens
        self.sig = sig
        self.n = len(sig)

    # -- token helpers -------------------------------------------------
    def _text(self, p: int) -> Optional[str]:
        if p < self.n:
            return self.tokens[self.sig[p]].text
        return None

    def _cat(self, p: int) -> Optional[str]:
        if p < self.n:
            return self.tokens[self.sig[p]].category
        return None

    def _expect(self, p: int, text: str) -> int:
        if self._text(p) != text:
            raise ParseError(f"expected {text!r}, found {self._text(p)!r}")
        return p + 1

    def _tok_end(self, p: int) -> int:
        # token-list end index for a node whose last significant token is p
        return self.sig[p] + 1

    def _node(self, kind, p0, p1, **kw) -> ExprNode:
        """Build a node spanning significant positions [p0, p1)."""
        return _link(ExprNode(kind, self.sig[p0], self._tok_end(p1 - 1), **kw))

    def matching(self, p: int) -> int:
        """Position of the bracket closing the one opened at ``p``."""
        pairs = {"(": ")", "[": "]", "{": "}"}
        opener = self._text(p)
        closer = pairs[opener]
        depth = 0
        for q in range(p, self.n):
            t = self._text(q)
            if t == opener:
                depth += 1
            elif t == closer:
                depth -= 1
                if depth == 0:
                    return q
        raise ParseError("unbalanced " + opener)

    # -- entry points ----------------------------------------------------
    def parse_expression(self, p: int = 0) -> Tuple[ExprNode, int]:
        return self._assignment(p)

    def parse_all(self) -> ExprNode:
        node, p = self._assignment(0)
        if p != self.n:
            raise ParseError(f"trailing tokens from {self._text(p)!r}")
        return node

    # -- grammar -----------------------------------------------------------
    def _assignment(self, p: int) -> Tuple[ExprNode, int]:
        lam = self._try_lambda(p)
        if lam is not None:
            return lam
        lhs, q = self._conditional(p)
        op = self._text(q)
        if op in ASSIGN_OPS and self._cat(q) == "operator":
            rhs, r = self._assignment(q + 1)
            node = self._node(ASSIGN, p, r, children=[lhs, rhs], op=op, op_tokens=[self.sig[q]])
            return node, r
        return lhs, q

    def _conditional(self, p: int) -> Tuple[ExprNode, int]:
        cond, q = self._binary(p, 3)
        if self._text(q) == "?":
            a, r = self._assignment(q + 1)
            r = self._expect(r, ":")
            lam = self._try_lambda(r)
            if lam is not None:
                b, s = lam
            else:
                b, s = self._conditional(r)
            return self._node(CONDITIONAL, p, s, children=[cond, a, b], op="?:"), s
        return cond, q

    def _binary(self, p: int, min_prec: int) -> Tuple[ExprNode, int]:
        left, q = self._unary(p)
        while True:
            op = self._text(q)
            prec = BINARY_PRECEDENCE.get(op) if op is not None else None
            if prec is None or prec < min_prec:
                break
            if self._cat(q) not in ("operator", KEYWORD):
                break
            op_pos = q
            if op == "instanceof":
                right, q = self._type(q + 1, allow_final=True)
                # Java 16 pattern binding: x instanceof Foo f
                if self._cat(q) == IDENTIFIER:
                    raise ParseError("instanceof pattern binding")
            else:
                right, q = self._binary(q + 1, prec + 1)
            if (
                left.kind == INFIX
                and left.op == op
                and op != "instanceof"
                and left.start == self.sig[p]
            ):
                # extend an n-ary chain of the same operator
                left.children.append(right)
                right.parent = left
                left.op_tokens.append(self.sig[op_pos])
                left.end = right.end
            else:
                left = self._node(
                    INFIX, p, q, children=[left, right], op=op, op_tokens=[self.sig[op_pos]]
                )
        return left, q

    def _unary(self, p: int) -> Tuple[ExprNode, int]:
        t = self._text(p)
        if t is None:
            raise ParseError("unexpected end of expression")
        if t in PREFIX_OPS and self._cat(p) == "operator":
            operand, q = self._unary(p + 1)
            return self._node(UNARY, p, q, children=[operand], op=t), q
        if t == "(":
            cast = self._try_cast(p)
            if cast is not None:
                return cast
        return self._postfix(p)

    def _try_cast(self, p: int) -> Optional[Tuple[ExprNode, int]]:
        try:
            close = self.matching(p)
        except ParseError:
            return None
        nxt = self._text(p + 1)
        if nxt in PRIMITIVE_TYPES:
            try:
                typ, q = self._type(p + 1)
            except ParseError:
                return None
            if q != close:
                return None
            operand, r = self._unary(close + 1)
            return self._node(CAST, p, r, children=[typ, operand], op=typ_text(self, typ)), r
        if self._cat(p + 1) != IDENTIFIER:
            return None
        try:
            typ, q = self._type(p + 1)
        except ParseError:
            return None
        if q != close:
            return None
        follow = close + 1
        ft = self._text(follow)
        fc = self._cat(follow)
        if ft is None:
            return None
        if fc in (IDENTIFIER,) or fc in LITERALS or ft in _CAST_FOLLOWERS_REF:
            if self._try_lambda(follow) is not None:
                operand, r = self._try_lambda(follow)
            else:
                operand, r = self._unary(follow)
            return self._node(CAST, p, r, children=[typ, operand], op=typ_text(self, typ)), r
        return None

    def _try_lambda(self, p: int) -> Optional[Tuple[ExprNode, int]]:
        t = self._text(p)
        if self._cat(p) == IDENTIFIER and self._text(p + 1) == "->":
            return self._lambda_body(p, p + 2)
        if t == "(":
            try:
                close = self.matching(p)
            except ParseError:
                return None
            if self._text(close + 1) == "->":
                return self._lambda_body(p, close + 2)
        return None

    def _lambda_body(self, p: int, body: int) -> Tuple[ExprNode, int]:
        if self._text(body) == "{":
            end = self.matching(body) + 1
        else:
            _, end = self._assignment(body)
        return self._node(LAMBDA, p, end), end

    def _postfix(self, p: int) -> Tuple[ExprNode, int]:
        node, q = self._primary(p)
        while True:
            t = self._text(q)
            if t == ".":
                nt = self._text(q + 1)
                nc = self._cat(q + 1)
                if nt == "<":
                    # explicit generic method call: a.<T>m(...)
                    _, r = self._type_args(q + 1)
                    if self._cat(r) != IDENTIFIER or self._text(r + 1) != "(":
                        raise ParseError("bad generic call")
                    node, q = self._call(p, node, r)
                elif nc == IDENTIFIER:
                    if self._text(q + 2) == "(":
                        node, q = self._call(p, node, q + 1)
                    else:
                        node = self._node(FIELD_ACCESS, p, q + 2, children=[node], op=nt)
                        q = q + 2
                elif nt in ("this", "class", "super"):
                    node = self._node(FIELD_ACCESS, p, q + 2, children=[node], op=nt)
                    q = q + 2
                elif nt == "new":
                    inner, r = self._creation(q + 1)
                    node = self._node(NEW, p, r, children=[node] + inner.children, op=inner.op)
                    q = r
                else:
                    raise ParseError("bad member access")
            elif t == "[":
                close = self.matching(q)
                idx, r = self._assignment(q + 1)
                if r != close:
                    raise ParseError("bad index")
                node = self._node(INDEX, p, close + 1, children=[node, idx])
                q = close + 1
            elif t in ("++", "--"):
                node = self._node(UNARY, p, q + 1, children=[node], op=t, postfix=True)
                q = q + 1
            elif t == "::":
                nt = self._text(q + 1)
                if self._cat(q + 1) != IDENTIFIER and nt != "new":
                    raise ParseError("bad method reference")
                node = self._node(OTHER, p, q + 2)
                q = q + 2
            else:
                return node, q

    def _call(self, p0: int, target: Optional[ExprNode], name_pos: int) -> Tuple[ExprNode, int]:
        args, end = self._arguments(name_pos + 1)
        children = ([target] if target is not None else []) + args
        node = self._node(CALL, p0, end, children=children, op=self._text(name_pos))
        node.postfix = target is not None  # marks a qualified call
        return node, end

    def _arguments(self, p: int) -> Tuple[List[ExprNode], int]:
        p = self._expect(p, "(")
        args: List[ExprNode] = []
        if self._text(p) == ")":
            return args, p + 1
        while True:
            arg, p = self._assignment(p)
            args.append(arg)
            t = self._text(p)
            if t == ",":
                p += 1
            elif t == ")":
                return args, p + 1
            else:
                raise ParseError("bad argument list")

    def _primary(self, p: int) -> Tuple[ExprNode, int]:
        t = self._text(p)
        c = self._cat(p)
        if t is None:
            raise ParseError("unexpected end of expression")
        if c in LITERALS:
            return self._node(LITERAL, p, p + 1), p + 1
        if c == IDENTIFIER:
            if self._text(p + 1) == "(":
                return self._call(p, None, p)
            return self._node(NAME, p, p + 1), p + 1
        if t in ("this", "super"):
            if self._text(p + 1) == "(":
                return self._call(p, None, p)
            return self._node(NAME, p, p + 1), p + 1
        if t == "(":
            close = self.matching(p)
            inner, q = self._assignment(p + 1)
            if q != close:
                raise ParseError("bad parenthesized expression")
            return self._node(PAREN, p, close + 1, children=[inner]), close + 1
        if t == "new":
            return self._creation(p)
        if t in PRIMITIVE_TYPES or t == "void":
            # int.class, int[].class
            typ, q = self._type(p)
            if self._text(q) == "." and self._text(q + 1) == "class":
                return self._node(OTHER, p, q + 2), q + 2
            if self._text(q) == "::":
                return self._node(OTHER, p, q + 2), q + 2
            raise ParseError("type in expression position")
        if t == "{":
            return self._array_init(p)
        raise ParseError(f"unexpected token {t!r}")

    def _creation(self, p: int) -> Tuple[ExprNode, int]:
        q = self._expect(p, "new")
        if self._text(q) == "<":
            _, q = self._type_args(q)
        typ, q = self._type(q, allow_dims=False)
        if self._text(q) == "(":
            args, r = self._arguments(q)
            anon = False
            if self._text(r) == "{":
                r = self.matching(r) + 1
                anon = True
            node = self._node(NEW, p, r, children=args, op=typ_text(self, typ))
            if anon:
                node.kind = OTHER
            return node, r
        if self._text(q) == "[":
            dims: List[ExprNode] = []
            while self._text(q) == "[":
                close = self.matching(q)
                if close == q + 1:
                    q = close + 1
                    continue
                d, r = self._assignment(q + 1)
                if r != close:
                    raise ParseError("bad array dimension")
                dims.append(d)
                q = close + 1
            if self._text(q) == "{":
                init, q = self._array_init(q)
                dims.append(init)
            return self._node(NEW, p, q, children=dims, op=typ_text(self, typ)), q
        raise ParseError("bad creation expression")

    def _array_init(self, p: int) -> Tuple[ExprNode, int]:
        close = self.matching(p)
        q = p + 1
        elems: List[ExprNode] = []
        while q < close:
            if self._text(q) == "{":
                e, q = self._array_init(q)
            else:
                e, q = self._assignment(q)
            elems.append(e)
            if self._text(q) == ",":
                q += 1
            elif q != close:
                raise ParseError("bad array initializer")
        return self._node(ARRAY_INIT, p, close + 1, children=elems), close + 1

    # -- types -------------------------------------------------------------
    def _type_args(self, p: int) -> Tuple[None, int]:
        """Skip a ``<...>`` type-argument list, handling ``>>`` closers."""
        if self._text(p) != "<":
            raise ParseError("expected type arguments")
        depth = 0
        q = p
        while q < self.n:
            t = self._text(q)
            c = self._cat(q)
            if t == "<":
                depth += 1
            elif t in (">", ">>", ">>>"):
                depth -= len(t)
                if depth < 0:
                    raise ParseError("unbalanced type arguments")
                if depth == 0:
                    return None, q + 1
            elif not (
                c == IDENTIFIER
                or t in PRIMITIVE_TYPES
                or t in (".", ",", "?", "extends", "super", "[", "]", "&", "@")
            ):
                raise ParseError("not a type argument list")
            q += 1
        raise ParseError("unterminated type arguments")

    def _type(self, p: int, allow_dims: bool = True, allow_final: bool = False) -> Tuple[ExprNode, int]:
        q = p
        if allow_final and self._text(q) == "final":
            q += 1
        t = self._text(q)
        if t in PRIMITIVE_TYPES or t == "void":
            q += 1
        elif self._cat(q) == IDENTIFIER:
            q += 1
            while True:
                if self._text(q) == "<":
                    _, q = self._type_args(q)
                if self._text(q) == "." and self._cat(q + 1) == IDENTIFIER:
                    q += 2
                    continue
                break
        else:
            raise ParseError("expected type")
        if allow_dims:
            while self._text(q) == "[" and self._text(q + 1) == "]":
                q += 2
        return self._node(TYPE, p, q), q


def typ_text(parser: ExpressionParser, node: ExprNode) -> str:
    return "".join(
        parser.tokens[i].text for i in range(node.start, node.end) if not parser.tokens[i].is_trivia
    )


def significant_indices(tokens: Sequence[Token], start: int = 0, end: Optional[int] = None) -> List[int]:
    end = len(tokens) if end is None else end
    return [i for i in range(start, end) if not tokens[i].is_trivia]


def parse_expression_text(text: str) -> Tuple[ExprNode, List[Token]]:
    """Tokenize and parse a standalone expression; raises on failure."""
    tokens = tokenize(text)
    sig = significant_indices(tokens)
    if not sig:
        raise ParseError("empty expression")
    return ExpressionParser(tokens, sig).parse_all(), tokens


# -- structural comparison ---------------------------------------------------

def signature(node: ExprNode, tokens: Sequence[Token], erase_parens: bool = False):
    """Hashable structural form of a tree.

    Leaves carry their token text. n-ary infix chains are rebuilt as
    left-nested binary nodes so ``(a + b) + c`` and ``a + b + c`` compare
    equal once parentheses are erased, while ``a + (b + c)`` does not.
    """
    if erase_parens and node.kind == PAREN:
        return signature(node.children[0], tokens, erase_parens)
    if node.kind in (LITERAL, NAME) or node.kind in OPAQUE_KINDS:
        return (node.kind, _sig_text(node, tokens))
    kids = [signature(c, tokens, erase_parens) for c in node.children]
    if node.kind == INFIX:
        acc = kids[0]
        for k in kids[1:]:
            acc = (INFIX, node.op, (acc, k))
        return acc
    return (node.kind, node.op, node.postfix, tuple(kids))


def _sig_text(node: ExprNode, tokens: Sequence[Token]) -> str:
    return " ".join(t.text for t in tokens[node.start : node.end] if not t.is_trivia)


def fold_infix(op: str, kid_sigs):
    """Left-nested binary signature of an n-ary chain."""
    acc = kid_sigs[0]
    for k in kid_sigs[1:]:
        acc = (INFIX, op, (acc, k))
    return acc
