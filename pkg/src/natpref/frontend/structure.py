"""Statement-level walk of a Java file.

This is not a Java parser. It recognizes enough structure (class bodies,
method headers, blocks, control statements, local declarations) to find
every statement-level expression and to build per-method tables of local
variables with block-accurate visibility. Anything it does not understand
is skipped, which only ever costs transformation sites.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .expr import (
    OTHER,
    ExpressionParser,
    ExprNode,
    ParseError,
    significant_indices,
    typ_text,
)
from .lexer import IDENTIFIER, KEYWORD, LexError, Token, tokenize  # noqa: F401

log = logging.getLogger(__name__)

MODIFIERS = frozenset(
    """final static private public protected transient volatile abstract native
    strictfp default sealed non-sealed""".split()
)
CONTROL_HEADERS = ("if", "while", "switch", "synchronized")


@dataclass(eq=False)
class VarDecl:
    name: str
    declared_type: str
    decl_token: int
    scope_end: int
    is_param: bool = False
    positions: List[int] = field(default_factory=list)
    decl_count_in_method: int = 1


@dataclass(eq=False)
class MethodScope:
    name: str
    header_start: int
    body_start: int
    body_end: int
    locals: List[VarDecl] = field(default_factory=list)
    contains_lambda: bool = False
    contains_class: bool = False
    occurrences: List[int] = field(default_factory=list)
    _by_name: Dict[str, List[VarDecl]] = field(default_factory=dict, repr=False)

    @property
    def body_span(self) -> Tuple[int, int]:
        return (self.body_start, self.body_end)

    def add_decl(self, decl: VarDecl) -> None:
        self.locals.append(decl)
        self._by_name.setdefault(decl.name, []).append(decl)

    def resolve(self, name: str, token_index: int) -> Optional[VarDecl]:
        """Innermost visible declaration of ``name`` at ``token_index``."""
        best = None
        for d in self._by_name.get(name, ()):
            if d.decl_token <= token_index < d.scope_end:
                if best is None or d.decl_token > best.decl_token:
                    best = d
        return best


@dataclass(eq=False)
class ExprSite:
    root: ExprNode
    context: str
    method: Optional[MethodScope]
    line_span: Tuple[int, int]
    file: Optional[str] = None

    @property
    def is_opaque(self) -> bool:
        return self.root.kind == OTHER


@dataclass(eq=False)
class ParsedFile:
    path: Optional[str]
    source: str
    tokens: List[Token]
    sites: List[ExprSite]
    methods: List[MethodScope]
    offsets: List[int]

    def char_span(self, start: int, end: int) -> Tuple[int, int]:
        """Character offsets of token range ``[start, end)``."""
        return self.offsets[start], self.offsets[end]


class _Walker:
    def __init__(self, tokens: Sequence[Token], path: Optional[str]):
        self.tokens = tokens
        self.path = path
        self.sig = significant_indices(tokens)
        self.n = len(self.sig)
        self.texts = [tokens[i].text for i in self.sig]
        self.cats = [tokens[i].category for i in self.sig]
        self.match = self._match_brackets()
        self.sites: List[ExprSite] = []
        self.methods: List[MethodScope] = []
        self.type_tokens: Set[int] = set()
        self.label_tokens: Set[int] = set()

    # -- helpers -----------------------------------------------------------
    def _match_brackets(self) -> Dict[int, int]:
        match: Dict[int, int] = {}
        stacks: Dict[str, List[int]] = {"(": [], "[": [], "{": []}
        closers = {")": "(", "]": "[", "}": "{"}
        for p, t in enumerate(self.texts):
            if t in stacks:
                stacks[t].append(p)
            elif t in closers:
                st = stacks[closers[t]]
                if not st:
                    raise ParseError(f"unbalanced {t!r}")
                q = st.pop()
                match[q] = p
                match[p] = q
        if any(stacks.values()):
            raise ParseError("unbalanced brackets")
        return match

    def t(self, p: int) -> Optional[str]:
        return self.texts[p] if 0 <= p < self.n else None

    def c(self, p: int) -> Optional[str]:
        return self.cats[p] if 0 <= p < self.n else None

    def tok(self, p: int) -> int:
        """Token index of significant position p (n maps to len(tokens))."""
        return self.sig[p] if p < self.n else len(self.tokens)

    def parser(self, p0: int, p1: int) -> ExpressionParser:
        return ExpressionParser(self.tokens, self.sig[p0:p1])

    def lines_of(self, node: ExprNode) -> Tuple[int, int]:
        first = self.tokens[node.start]
        last = self.tokens[node.end - 1]
        return first.line, last.end_line

    # -- sites -------------------------------------------------------------
    def add_site(self, p0: int, p1: int, context: str, method: Optional[MethodScope]) -> None:
        if p1 <= p0:
            return
        try:
            node = self.parser(p0, p1).parse_all()
        except (ParseError, RecursionError):
            node = ExprNode(OTHER, self.sig[p0], self.sig[p1 - 1] + 1)
        self._record(node, context, method)

    def _record(self, node: ExprNode, context: str, method: Optional[MethodScope]) -> None:
        self.sites.append(ExprSite(node, context, method, self.lines_of(node), self.path))

    def add_expression_list(self, p0: int, p1: int, context: str, method) -> None:
        for a, b in self._split_commas(p0, p1):
            self.add_site(a, b, context, method)

    def _split_commas(self, p0: int, p1: int) -> List[Tuple[int, int]]:
        parts = []
        start = p0
        p = p0
        while p < p1:
            t = self.texts[p]
            if t in ("(", "[", "{"):
                p = self.match[p]
            elif t == ",":
                parts.append((start, p))
                start = p + 1
            p += 1
        parts.append((start, p1))
        return [(a, b) for a, b in parts if b > a]

    # -- declarations --------------------------------------------------------
    def skip_modifiers(self, p: int, end: int) -> int:
        while p < end:
            t = self.texts[p]
            if t in MODIFIERS and not (t == "synchronized" and self.t(p + 1) == "("):
                p += 1
            elif t == "@" and self.t(p + 1) != "interface":
                p += 2
                while self.t(p) == "." and self.c(p + 1) == IDENTIFIER:
                    p += 2
                if self.t(p) == "(":
                    p = self.match[p] + 1
            else:
                break
        return p

    def parse_declaration(
        self,
        p0: int,
        p1: int,
        context: str,
        method: Optional[MethodScope],
        scope_end: Optional[int],
        with_sites: bool = True,
    ) -> bool:
        """Try to read ``p0..p1`` as a variable declaration.

        Records declarators in ``method`` (visible until ``scope_end``, a
        token index) and initializers as sites. Returns False, recording
        nothing, when the tokens are not a declaration.
        """
        q = self.skip_modifiers(p0, p1)
        if q >= p1:
            return False
        parser = self.parser(q, p1)
        try:
            typ, r = parser._type(0)
        except ParseError:
            return False
        if r >= parser.n or parser._cat(r) != IDENTIFIER:
            return False
        type_name = typ_text(parser, typ)
        decls = []
        inits = []
        pending_sites = []
        while True:
            if parser._cat(r) != IDENTIFIER:
                return False
            name_pos = r
            r += 1
            dims = 0
            while parser._text(r) == "[" and parser._text(r + 1) == "]":
                r += 2
                dims += 1
            if parser._text(r) == "=":
                try:
                    if parser._text(r + 1) == "{":
                        init, r2 = parser._array_init(r + 1)
                    else:
                        init, r2 = parser.parse_expression(r + 1)
                except (ParseError, RecursionError):
                    if decls or parser._text(r + 1) is None:
                        return False
                    # unparseable initializer: keep the declaration, skip the rest
                    init = ExprNode(OTHER, parser.sig[r + 1], parser.sig[-1] + 1)
                    r2 = parser.n
                pending_sites.append(init)
                inits.append(init)
                r = r2
            decls.append((parser.sig[name_pos], type_name + "[]" * dims))
            if r >= parser.n:
                break
            if parser._text(r) == ",":
                r += 1
                continue
            return False
        for i in range(typ.start, typ.end):
            self.type_tokens.add(i)
        if method is not None and scope_end is not None:
            for tok_idx, tname in decls:
                method.add_decl(VarDecl(self.tokens[tok_idx].text, tname, tok_idx, scope_end))
        if with_sites:
            for init in pending_sites:
                self._record(init, context, method)
        return True

    def parse_params(self, p0: int, p1: int, method: MethodScope, scope_end: int) -> bool:
        for a, b in self._split_params(p0, p1):
            q = self.skip_modifiers(a, b)
            parser = self.parser(q, b)
            try:
                typ, r = parser._type(0)
            except ParseError:
                return False
            if parser._text(r) == "...":
                r += 1
            if parser._cat(r) != IDENTIFIER:
                # receiver parameter "Foo this" and the like
                if parser._text(r) == "this":
                    continue
                return False
            name_idx = parser.sig[r]
            r += 1
            dims = 0
            while parser._text(r) == "[" and parser._text(r + 1) == "]":
                r += 2
                dims += 1
            if r != parser.n:
                return False
            for i in range(typ.start, typ.end):
                self.type_tokens.add(i)
            method.add_decl(
                VarDecl(
                    self.tokens[name_idx].text,
                    typ_text(parser, typ) + "[]" * dims,
                    name_idx,
                    scope_end,
                    is_param=True,
                )
            )
        return True

    def _split_params(self, p0: int, p1: int) -> List[Tuple[int, int]]:
        # generic commas count too, so track angle depth as well
        parts = []
        start = p0
        angle = 0
        p = p0
        while p < p1:
            t = self.texts[p]
            if t in ("(", "["):
                p = self.match[p]
            elif t == "<":
                angle += 1
            elif t in (">", ">>", ">>>"):
                angle -= len(t)
            elif t == "," and angle == 0:
                parts.append((start, p))
                start = p + 1
            p += 1
        parts.append((start, p1))
        return [(a, b) for a, b in parts if b > a]

    # -- statement scanning ------------------------------------------------
    def is_expression_brace(self, p: int, stmt_start: int) -> bool:
        prev = self.t(p - 1) if p - 1 >= stmt_start else None
        if prev in ("=", "->", "]", ",", "?", "(", "return"):
            return True
        if prev == ")":
            j = self.match[p - 1] - 1
            while j >= stmt_start and (
                self.cats[j] == IDENTIFIER
                or self.texts[j] in (".", "<", ">", ">>", ">>>", ",", "?", "extends", "super")
            ):
                j -= 1
            return j >= stmt_start and self.texts[j] == "new"
        return False

    def scan_statement(self, p: int, end: int) -> Tuple[int, str]:
        """Advance to the statement terminator.

        Returns ``(q, kind)`` where kind is ``";"`` (q at the semicolon),
        ``"{"`` (q at a block-opening brace) or ``"}"``/``"end"``.
        """
        start = p
        while p < end:
            t = self.texts[p]
            if t in ("(", "["):
                p = self.match[p] + 1
                continue
            if t == "{":
                if self.is_expression_brace(p, start):
                    p = self.match[p] + 1
                    continue
                return p, "{"
            if t == ";":
                return p, ";"
            if t == "}":
                return p, "}"
            p += 1
        return p, "end"

    def statement_end(self, p: int, end: int) -> int:
        """Position just past the statement starting at p."""
        t = self.t(p)
        if p >= end or t is None:
            return end
        if t == "{":
            return self.match[p] + 1
        if t in ("if", "while", "for", "switch", "synchronized") and self.t(p + 1) == "(":
            q = self.match[p + 1] + 1
            if t == "switch":
                return self.match[q] + 1 if self.t(q) == "{" else q
            q = self.statement_end(q, end)
            if t == "if" and self.t(q) == "else":
                q = self.statement_end(q + 1, end)
            return q
        if t == "do":
            q = self.statement_end(p + 1, end)
            if self.t(q) == "while" and self.t(q + 1) == "(":
                q = self.match[q + 1] + 1
            return q + 1 if self.t(q) == ";" else q
        if t == "try":
            q = p + 1
            if self.t(q) == "(":
                q = self.match[q] + 1
            if self.t(q) == "{":
                q = self.match[q] + 1
            while self.t(q) in ("catch", "finally"):
                if self.t(q) == "catch":
                    q = self.match[q + 1] + 1
                else:
                    q += 1
                if self.t(q) == "{":
                    q = self.match[q] + 1
            return q
        if self.c(p) == IDENTIFIER and self.t(p + 1) == ":":
            return self.statement_end(p + 2, end)
        q, kind = self.scan_statement(p, end)
        if kind == ";":
            return q + 1
        if kind == "{":
            return self.match[q] + 1
        return q

    # -- walking -----------------------------------------------------------
    def walk_file(self) -> None:
        self.walk_members(0, self.n)

    def _is_class_header(self, p0: int, p1: int) -> bool:
        for p in range(p0, p1):
            t = self.texts[p]
            if t in ("class", "interface", "enum") and self.cats[p] == KEYWORD:
                if t == "class" and p > p0 and self.texts[p - 1] == ".":
                    continue
                return True
            if t == "record" and self.c(p + 1) == IDENTIFIER and self.t(p + 2) in ("(", "<"):
                return True
        return False

    def walk_members(self, p: int, end: int) -> None:
        """Walk a class body (or the compilation unit) between p and end."""
        while p < end:
            t = self.texts[p]
            if t in (";", ","):
                p += 1
                continue
            if t == "{":
                # initializer block
                self.walk_block(p + 1, self.match[p], None)
                p = self.match[p] + 1
                continue
            if t in ("package", "import"):
                q, _ = self.scan_statement(p, end)
                p = q + 1
                continue
            q, kind = self.scan_statement(p, end)
            if kind == ";":
                self.parse_declaration(p, q, "field", None, None)
                p = q + 1
            elif kind == "{":
                self.walk_member_block(p, q)
                p = self.match[q] + 1
            elif kind == "}":
                p = q + 1
            else:
                p = q

    def walk_member_block(self, p0: int, brace: int) -> None:
        close = self.match[brace]
        if self._is_class_header(p0, brace):
            self.walk_members(brace + 1, close)
            return
        method = self._method_header(p0, brace)
        if method is None:
            # enum constant body or other anonymous-ish member body
            self.walk_members(brace + 1, close)
            return
        self.methods.append(method)
        self.walk_block(brace + 1, close, method)
        self._finish_method(method)

    def _method_header(self, p0: int, brace: int) -> Optional[MethodScope]:
        q = self.skip_modifiers(p0, brace)
        # locate the first depth-0 parenthesis of the header
        p = q
        open_paren = None
        while p < brace:
            t = self.texts[p]
            if t == "=":
                return None
            if t == "(":
                open_paren = p
                break
            if t == "[":
                p = self.match[p]
            p += 1
        if open_paren is None or self.c(open_paren - 1) != IDENTIFIER:
            return None
        close_paren = self.match[open_paren]
        r = close_paren + 1
        while self.t(r) == "[" and self.t(r + 1) == "]":
            r += 2
        if self.t(r) == "throws":
            r += 1
            while r < brace and (self.c(r) == IDENTIFIER or self.t(r) in (".", ",", "<", ">", "?")):
                r += 1
        if r != brace:
            return None
        method = MethodScope(
            name=self.texts[open_paren - 1],
            header_start=self.tok(p0),
            body_start=self.tok(brace),
            body_end=self.tok(self.match[brace]) + 1,
        )
        if not self.parse_params(open_paren + 1, close_paren, method, method.body_end):
            return None
        return method

    def walk_block(self, p: int, end: int, method: Optional[MethodScope]) -> None:
        while p < end:
            p = self.walk_statement(p, end, method)

    def _block_scope_end(self, end: int) -> int:
        # token index one past the closing brace of the current block
        return self.tok(end) + 1 if end < self.n else len(self.tokens)

    def walk_statement(self, p: int, end: int, method: Optional[MethodScope]) -> int:
        t = self.texts[p]
        if t == "{":
            close = self.match[p]
            self.walk_block(p + 1, close, method)
            return close + 1
        if t == ";":
            return p + 1
        if t in CONTROL_HEADERS and self.t(p + 1) == "(":
            close = self.match[p + 1]
            self.add_site(p + 2, close, t, method)
            q = close + 1
            if t == "switch":
                if self.t(q) == "{":
                    body_close = self.match[q]
                    self.walk_block(q + 1, body_close, method)
                    return body_close + 1
                return q
            q = self.walk_statement(q, end, method) if q < end else q
            if t == "if" and self.t(q) == "else":
                q = self.walk_statement(q + 1, end, method) if q + 1 < end else q + 1
            return q
        if t == "for" and self.t(p + 1) == "(":
            return self.walk_for(p, end, method)
        if t == "do":
            q = self.walk_statement(p + 1, end, method)
            if self.t(q) == "while" and self.t(q + 1) == "(":
                close = self.match[q + 1]
                self.add_site(q + 2, close, "do_while", method)
                q = close + 1
            return q + 1 if self.t(q) == ";" else q
        if t == "try":
            return self.walk_try(p, end, method)
        if t in ("else", "finally"):
            return p + 1
        if t == "case":
            q = p + 1
            while q < end and self.texts[q] not in (":", "->"):
                if self.texts[q] in ("(", "["):
                    q = self.match[q]
                q += 1
            self.add_expression_list(p + 1, q, "case", method)
            return q + 1
        if t == "default" and self.t(p + 1) in (":", "->"):
            return p + 2
        if self.cats[p] == IDENTIFIER and self.t(p + 1) == ":":
            self.label_tokens.add(self.sig[p])
            return p + 2
        q, kind = self.scan_statement(p, end)
        if kind == "{":
            # local class or an unknown block construct
            close = self.match[q]
            if self._is_class_header(p, q):
                if method is not None:
                    method.contains_class = True
                self.walk_members(q + 1, close)
            else:
                self.walk_block(q + 1, close, method)
            return close + 1
        if kind != ";":
            return max(q, p + 1)
        self.simple_statement(p, q, end, method)
        return q + 1

    def simple_statement(self, p: int, q: int, block_end: int, method) -> None:
        t = self.texts[p]
        if t in ("return", "throw"):
            self.add_site(p + 1, q, t, method)
            return
        if t in ("break", "continue"):
            if p + 1 < q:
                self.label_tokens.add(self.sig[p + 1])
            return
        if t == "yield" and p + 1 < q and self.t(p + 1) not in ("=", "(", "."):
            self.add_site(p + 1, q, "yield", method)
            return
        if t == "assert":
            r = p + 1
            colon = None
            depth = 0
            while r < q:
                tr = self.texts[r]
                if tr in ("(", "[", "{"):
                    r = self.match[r]
                elif tr == "?":
                    depth += 1
                elif tr == ":":
                    if depth == 0:
                        colon = r
                        break
                    depth -= 1
                r += 1
            if colon is None:
                self.add_site(p + 1, q, "assert", method)
            else:
                self.add_site(p + 1, colon, "assert", method)
                self.add_site(colon + 1, q, "assert", method)
            return
        if self.parse_declaration(p, q, "vardecl", method, self._block_scope_end(block_end)):
            return
        self.add_site(p, q, "expr_stmt", method)

    def walk_for(self, p: int, end: int, method) -> int:
        open_ = p + 1
        close = self.match[open_]
        body = close + 1
        body_end = self.statement_end(body, end)
        scope_end = self.tok(body_end - 1) + 1 if body_end - 1 < self.n else len(self.tokens)
        semis = []
        colon = None
        r = open_ + 1
        while r < close:
            tr = self.texts[r]
            if tr in ("(", "[", "{"):
                r = self.match[r]
            elif tr == ";":
                semis.append(r)
            elif tr == ":" and colon is None:
                colon = r
            r += 1
        if len(semis) == 2:
            init_end, cond_end = semis
            if not self.parse_declaration(open_ + 1, init_end, "for_init", method, scope_end):
                self.add_expression_list(open_ + 1, init_end, "for_init", method)
            self.add_site(init_end + 1, cond_end, "for", method)
            self.add_expression_list(cond_end + 1, close, "for_update", method)
        elif colon is not None:
            self.parse_declaration(open_ + 1, colon, "foreach", method, scope_end, with_sites=False)
            self.add_site(colon + 1, close, "foreach", method)
        return self.walk_statement(body, end, method) if body < end else body

    def walk_try(self, p: int, end: int, method) -> int:
        q = p + 1
        block_scope = None
        if self.t(q) == "(":
            close = self.match[q]
            block = close + 1
            block_scope = self.tok(self.match[block]) + 1 if self.t(block) == "{" else None
            for a, b in self._split_semis(q + 1, close):
                if not self.parse_declaration(a, b, "resource", method, block_scope):
                    self.add_site(a, b, "resource", method)
            q = block
        if self.t(q) == "{":
            close = self.match[q]
            self.walk_block(q + 1, close, method)
            q = close + 1
        while self.t(q) in ("catch", "finally"):
            if self.t(q) == "catch" and self.t(q + 1) == "(":
                pclose = self.match[q + 1]
                blk = pclose + 1
                if method is not None and self.t(blk) == "{":
                    self._catch_param(q + 2, pclose, method, self.tok(self.match[blk]) + 1)
                q = blk
            else:
                q += 1
            if self.t(q) == "{":
                close = self.match[q]
                self.walk_block(q + 1, close, method)
                q = close + 1
        return q

    def _split_semis(self, p0: int, p1: int) -> List[Tuple[int, int]]:
        parts = []
        start = p0
        p = p0
        while p < p1:
            t = self.texts[p]
            if t in ("(", "[", "{"):
                p = self.match[p]
            elif t == ";":
                parts.append((start, p))
                start = p + 1
            p += 1
        parts.append((start, p1))
        return [(a, b) for a, b in parts if b > a]

    def _catch_param(self, p0: int, p1: int, method: MethodScope, scope_end: int) -> None:
        q = self.skip_modifiers(p0, p1)
        if p1 - 1 >= q and self.cats[p1 - 1] == IDENTIFIER:
            type_text = "".join(self.texts[q : p1 - 1])
            for p in range(q, p1 - 1):
                self.type_tokens.add(self.sig[p])
            idx = self.sig[p1 - 1]
            method.add_decl(VarDecl(self.tokens[idx].text, type_text, idx, scope_end))

    # -- method post-processing -----------------------------------------------
    def _finish_method(self, method: MethodScope) -> None:
        p0 = self._pos_of(method.header_start)
        p1 = self._pos_of(method.body_end - 1) + 1
        counts: Dict[str, int] = {}
        for d in method.locals:
            counts[d.name] = counts.get(d.name, 0) + 1
        for d in method.locals:
            d.decl_count_in_method = counts[d.name]
        body_p0 = self._pos_of(method.body_start)
        for p in range(body_p0, p1):
            t = self.texts[p]
            if t in ("->", "::"):
                method.contains_lambda = True
            elif t == "{" and p > body_p0 and self.texts[p - 1] == ")":
                j = self.match[p - 1] - 1
                while j > body_p0 and (self.cats[j] == IDENTIFIER or self.texts[j] in (".", "<", ">", ",", "?")):
                    j -= 1
                if self.texts[j] == "new":
                    method.contains_class = True
        for p in range(p0, p1):
            if self.cats[p] != IDENTIFIER:
                continue
            idx = self.sig[p]
            if not self._is_variable_like(p, idx):
                continue
            method.occurrences.append(idx)
            decl = method.resolve(self.texts[p], idx)
            if decl is not None:
                decl.positions.append(idx)

    def _is_variable_like(self, p: int, idx: int) -> bool:
        if idx in self.type_tokens or idx in self.label_tokens:
            return False
        prev = self.t(p - 1)
        if prev in (".", "@", "new", "::", "break", "continue"):
            return False
        nxt = self.t(p + 1)
        if nxt == "(":
            return False
        if self.c(p + 1) == IDENTIFIER:
            return False
        return True

    def _pos_of(self, token_index: int) -> int:
        return bisect.bisect_left(self.sig, token_index)


def _offsets(tokens: Sequence[Token]) -> List[int]:
    out = [0]
    for t in tokens:
        out.append(out[-1] + len(t.text))
    return out


def parse_file(source: str, path: Optional[str] = None, tokens: Optional[List[Token]] = None) -> ParsedFile:
    """Tokenize and walk one file.

    Raises
    ------
    LexError
        When the source cannot be tokenized.
    ParseError
        When brackets are unbalanced; nothing useful can be recovered then.
    """
    if tokens is None:
        tokens = tokenize(source)
    walker = _Walker(tokens, path)
    walker.walk_file()
    return ParsedFile(path, source, tokens, walker.sites, walker.methods, _offsets(tokens))


def parse_expressions(tokens: List[Token]) -> List[ExprSite]:
    """Every statement-level expression of a tokenized file."""
    return parse_file("".join(t.text for t in tokens), tokens=tokens).sites


def analyze_methods(tokens: List[Token]) -> List[MethodScope]:
    """Method scopes with their local declarations and use sites."""
    return parse_file("".join(t.text for t in tokens), tokens=tokens).methods


__all__ = [
    "ExprSite",
    "LexError",
    "MethodScope",
    "ParsedFile",
    "VarDecl",
    "analyze_methods",
    "parse_expressions",
    "parse_file",
]
