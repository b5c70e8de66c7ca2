"""Meaning-preserving rewrites of Java expressions and methods.

Six kinds of edit are generated:

* ``arith_swap``: exchange the operands around one ``+`` or ``*``;
* ``rel_swap``: exchange comparison operands, mirroring ``<``/``>`` etc.;
* ``paren_add`` / ``paren_remove``: insert or delete redundant parentheses;
* ``shuffle_within`` / ``shuffle_between``: permute local variable names
  inside one method, among equally typed locals or across all of them.

Every expression edit is checked by re-parsing the edited text and comparing
trees, so a candidate that would change meaning is dropped rather than
emitted.
"""

from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .frontend.expr import (
    ARITH_OPS,
    BITWISE_OPS,
    CONDITIONAL,
    INFIX,
    INT,
    LITERAL,
    LONG,
    NAME,
    NUMERIC_TAGS,
    PAREN,
    RELATIONAL_OPS,
    SHIFT_OPS,
    UNARY,
    ExprNode,
    ParseError,
    fold_infix,
    parse_expression_text,
    signature,
)
from .frontend.lexer import LexError, Token, tokenize
from .frontend.structure import ExprSite, MethodScope, ParsedFile, parse_file
from .frontend.typecheck import type_of
from .seeding import rng_for

log = logging.getLogger(__name__)

ARITH_SWAP = "arith_swap"
REL_SWAP = "rel_swap"
PAREN_ADD = "paren_add"
PAREN_REMOVE = "paren_remove"
SHUFFLE_WITHIN = "shuffle_within"
SHUFFLE_BETWEEN = "shuffle_between"

EXPRESSION_KINDS = (ARITH_SWAP, REL_SWAP, PAREN_ADD, PAREN_REMOVE)
SHUFFLE_KINDS = (SHUFFLE_WITHIN, SHUFFLE_BETWEEN)
ALL_KINDS = EXPRESSION_KINDS + SHUFFLE_KINDS

MIRROR = {"<": ">", ">": "<", "<=": ">=", ">=": "<=", "==": "==", "!=": "!="}
EXCLUDED_SHUFFLE_METHODS = frozenset({"equals", "hashCode"})
MAX_SHUFFLE_LOCALS = 10
_PRIMITIVES = frozenset({"boolean", "byte", "char", "short", "int", "long", "float", "double"})
_SIMPLE_TYPE = re.compile(r"^[A-Za-z_$][A-Za-z0-9_$]*$")
_SWAP_LEAF_KINDS = frozenset({NAME, LITERAL})
_SIDE_EFFECT_UNARY = frozenset({"++", "--"})


class TransformError(ValueError):
    """A requested transformation is not applicable at that site."""


@dataclass
class Candidate:
    """One transformation location, before it is realized."""

    kind: str
    site: ExprSite
    node: ExprNode
    position: int = 0
    targets: Tuple[ExprNode, ...] = ()
    site_index: int = 0


@dataclass
class TransformRecord:
    kind: str
    file: Optional[str]
    span: Tuple[int, int]
    lines: Tuple[int, int]
    original_text: str
    transformed_text: str
    shared_tokens: Counter
    covariates: Dict[str, object] = field(default_factory=dict)
    meta: Dict[str, object] = field(default_factory=dict)

    def apply(self, source: str) -> str:
        s, e = self.span
        if source[s:e] != self.original_text:
            raise TransformError("source does not match record")
        return source[:s] + self.transformed_text + source[e:]

    @property
    def edit_span_transformed(self) -> Tuple[int, int]:
        return (self.span[0], self.span[0] + len(self.transformed_text))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "file": self.file,
            "span": list(self.span),
            "lines": list(self.lines),
            "original_text": self.original_text,
            "transformed_text": self.transformed_text,
            "shared_tokens": dict(sorted(self.shared_tokens.items())),
            "covariates": self.covariates,
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TransformRecord":
        return cls(
            d["kind"],
            d.get("file"),
            tuple(d["span"]),
            tuple(d["lines"]),
            d["original_text"],
            d["transformed_text"],
            Counter(d.get("shared_tokens", {})),
            dict(d.get("covariates", {})),
            dict(d.get("meta", {})),
        )


# -- helpers -----------------------------------------------------------------

def token_multiset(text: str) -> Counter:
    return Counter(t.text for t in tokenize(text) if not t.is_trivia)


def _contains_side_effects(node: ExprNode) -> bool:
    """Calls, object creation, assignment, ++/-- or anything opaque."""
    for n in node.walk():
        if n.kind in ("call", "new", "assign", "lambda", "other", "array_init"):
            return True
        if n.kind == UNARY and n.op in _SIDE_EFFECT_UNARY:
            return True
    return False


def _splice(tokens: Sequence[Token], start: int, end: int, edits) -> str:
    """Text of tokens[start:end] with ``(tok_start, tok_end, text)`` edits."""
    out = []
    pos = start
    for a, b, text in sorted(edits, key=lambda e: e[0]):
        if a < pos:
            raise TransformError("overlapping edits")
        out.append("".join(t.text for t in tokens[pos:a]))
        out.append(text)
        pos = b
    out.append("".join(t.text for t in tokens[pos:end]))
    return "".join(out)


def _glues(left: str, right: str) -> bool:
    """Would ``left`` + ``right`` lex differently from the two separately?"""
    if not left or not right:
        return False
    try:
        both = [t.text for t in tokenize(left + right)]
        return both != [t.text for t in tokenize(left)] + [t.text for t in tokenize(right)]
    except LexError:
        return True


def _node_text(node: ExprNode, tokens) -> str:
    return "".join(t.text for t in tokens[node.start : node.end])


def parent_descriptor(node: ExprNode, site: ExprSite) -> str:
    parent = node.parent
    if parent is None:
        return site.context
    if parent.kind == INFIX:
        return parent.op
    if parent.kind == "assign":
        return "assign"
    return parent.kind


def infix_operators(node: ExprNode) -> List[str]:
    return [n.op for n in node.walk() if n.kind == INFIX for _ in n.op_tokens]


# -- site discovery ----------------------------------------------------------

def _arith_eligible(node: ExprNode, scope, tokens) -> bool:
    if node.kind != INFIX or node.op not in ("+", "*"):
        return False
    leaf_types = []
    for n in node.walk():
        if n.kind == INFIX:
            if n.op not in ARITH_OPS and n.op not in BITWISE_OPS and n.op not in SHIFT_OPS:
                return False
        elif n.kind == UNARY:
            if n.postfix or n.op not in ("-", "+", "~"):
                return False
        elif n.kind == PAREN:
            continue
        elif n.kind in _SWAP_LEAF_KINDS:
            leaf_types.append(type_of(n, scope, tokens))
        else:
            # calls, casts, field/array access and the like
            return False
    if not leaf_types or any(t not in NUMERIC_TAGS for t in leaf_types):
        return False
    if type_of(node, scope, tokens) not in NUMERIC_TAGS:
        return False
    if len(node.children) > 2:
        if any(t not in (INT, LONG) for t in leaf_types) or len(set(leaf_types)) != 1:
            return False
    return True


def _rel_eligible(node: ExprNode) -> bool:
    return (
        node.kind == INFIX
        and node.op in RELATIONAL_OPS
        and len(node.children) == 2
        and not _contains_side_effects(node)
    )


def _touches_lines(node: ExprNode, tokens, excluded: Set[int]) -> bool:
    if not excluded:
        return False
    first = tokens[node.start].line
    last = tokens[node.end - 1].end_line
    return any(line in excluded for line in range(first, last + 1))


def _paren_add_groups(node: ExprNode) -> List[Tuple[ExprNode, ...]]:
    """Wrap targets for parent ``node``; symmetric boolean chains are wrapped together."""
    if node.kind == INFIX and node.op != "instanceof":
        kids = node.children
        infix_kids = [k for k in kids if k.kind == INFIX]
        if not infix_kids:
            return []
        if node.op in ("&&", "||") and len(infix_kids) == len(kids):
            return [tuple(kids)]
        return [(k,) for k in infix_kids]
    if node.kind == CONDITIONAL:
        return [(k,) for k in node.children if k.kind == INFIX]
    return []


def find_sites(
    parsed: ParsedFile,
    kind: str,
    excluded_lines: Iterable[int] = (),
    validate: bool = True,
) -> List[Candidate]:
    """Candidate locations of ``kind`` in one parsed file.

    Candidates touching an excluded line are dropped. With ``validate`` each
    expression candidate is realized once and kept only if the re-parse
    check passes and the text actually changes.
    """
    excluded = set(excluded_lines)
    tokens = parsed.tokens
    out: List[Candidate] = []
    if kind in SHUFFLE_KINDS:
        raise TransformError("shuffles are per method; use shuffle_candidates")
    for si, site in enumerate(parsed.sites):
        if site.root.is_opaque:
            continue
        # compute type tags once per site
        type_of(site.root, site.method, tokens)
        for node in site.root.walk():
            if _touches_lines(node, tokens, excluded):
                continue
            cands: List[Candidate] = []
            if kind == ARITH_SWAP and _arith_eligible(node, site.method, tokens):
                cands = [Candidate(kind, site, node, pos, site_index=si) for pos in range(1, len(node.children))]
            elif kind == REL_SWAP and _rel_eligible(node):
                cands = [Candidate(kind, site, node, 1, site_index=si)]
            elif kind == PAREN_ADD:
                groups = _paren_add_groups(node)
                cands = [Candidate(kind, site, node, i, tuple(g), site_index=si) for i, g in enumerate(groups)]
            elif kind == PAREN_REMOVE and node.kind == PAREN:
                region = node.parent if node.parent is not None else node
                cands = [Candidate(kind, site, region, 0, (node,), site_index=si)]
            for c in cands:
                if not validate:
                    out.append(c)
                    continue
                try:
                    realize(parsed, c)
                except TransformError:
                    continue
                out.append(c)
    return out


# -- realization ---------------------------------------------------------------

def _region_record(parsed: ParsedFile, cand: Candidate, region: ExprNode, edits, meta) -> TransformRecord:
    tokens = parsed.tokens
    site = cand.site
    original = _node_text(region, tokens)
    transformed = _splice(tokens, region.start, region.end, edits)
    if transformed == original:
        raise TransformError("no-op transformation")
    # check the edit in the context of the whole statement-level expression
    root = site.root
    root_text = _splice(tokens, root.start, root.end, edits)
    try:
        new_root, new_tokens = parse_expression_text(root_text)
    except (ParseError, LexError, RecursionError) as exc:
        raise TransformError(f"edited expression does not parse: {exc}") from exc
    expected = _expected_signature(parsed, cand)
    erase = cand.kind in (PAREN_ADD, PAREN_REMOVE)
    if signature(new_root, new_tokens, erase_parens=erase) != expected:
        raise TransformError("edit changes the expression tree")
    # guard against gluing with the neighbouring tokens
    if region.start > 0 and not tokens[region.start - 1].is_trivia:
        if _glues(tokens[region.start - 1].text, transformed[:1] and tokenize(transformed)[0].text):
            transformed = " " + transformed
    if region.end < len(tokens) and not tokens[region.end].is_trivia:
        last = [t for t in tokenize(transformed)][-1].text
        if _glues(last, tokens[region.end].text):
            transformed = transformed + " "
    s, e = parsed.char_span(region.start, region.end)
    shared = token_multiset(original) & token_multiset(transformed)
    covariates = {
        "num_tokens": sum(1 for t in tokens[region.start : region.end] if not t.is_trivia),
        "parent_kind": parent_descriptor(region, site),
        "operators": infix_operators(region),
    }
    meta = dict(meta)
    meta["site_index"] = cand.site_index
    meta["context"] = site.context
    return TransformRecord(
        cand.kind,
        parsed.path,
        (s, e),
        (tokens[region.start].line, tokens[region.end - 1].end_line),
        original,
        transformed,
        shared,
        covariates,
        meta,
    )


def _expected_signature(parsed: ParsedFile, cand: Candidate):
    """Signature the edited root must have for the edit to be sound."""
    tokens = parsed.tokens
    root = cand.site.root
    if cand.kind in (PAREN_ADD, PAREN_REMOVE):
        return signature(root, tokens, erase_parens=True)
    target = cand.node

    def build(node: ExprNode):
        if node is target:
            kids = [build(c) for c in node.children]
            i = cand.position
            kids[i - 1], kids[i] = kids[i], kids[i - 1]
            op = MIRROR[node.op] if cand.kind == REL_SWAP else node.op
            return fold_infix(op, kids)
        if node.kind in (LITERAL, NAME) or node.is_opaque:
            return signature(node, tokens)
        kids = [build(c) for c in node.children]
        if node.kind == INFIX:
            return fold_infix(node.op, kids)
        return (node.kind, node.op, node.postfix, tuple(kids))

    return build(root)


def arithmetic_swap(parsed: ParsedFile, site: ExprSite, node: ExprNode, position: int) -> TransformRecord:
    """Swap the operands on either side of operator occurrence ``position`` (1-based)."""
    if not 1 <= position < len(node.children):
        raise TransformError(f"position {position} out of range")
    return realize(parsed, Candidate(ARITH_SWAP, site, node, position))


def relational_swap(parsed: ParsedFile, site: ExprSite, node: ExprNode) -> TransformRecord:
    return realize(parsed, Candidate(REL_SWAP, site, node, 1))


def paren_add(parsed: ParsedFile, site: ExprSite, targets: Sequence[ExprNode]) -> TransformRecord:
    targets = tuple(targets)
    if not targets:
        raise TransformError("no targets")
    parent = targets[0].parent
    if parent is None:
        raise TransformError("parentheses are never added around the entire expression")
    return realize(parsed, Candidate(PAREN_ADD, site, parent, 0, targets))


def paren_remove(parsed: ParsedFile, site: ExprSite, node: ExprNode) -> TransformRecord:
    region = node.parent if node.parent is not None else node
    return realize(parsed, Candidate(PAREN_REMOVE, site, region, 0, (node,)))


def realize(parsed: ParsedFile, cand: Candidate) -> TransformRecord:
    """Turn a candidate into a checked TransformRecord."""
    tokens = parsed.tokens
    node = cand.node
    if cand.kind in (ARITH_SWAP, REL_SWAP):
        if node.kind != INFIX or not 1 <= cand.position < len(node.children):
            raise TransformError("bad swap location")
        if cand.kind == ARITH_SWAP and not _arith_eligible(node, cand.site.method, tokens):
            raise TransformError("arithmetic swap preconditions not met")
        if cand.kind == REL_SWAP and not _rel_eligible(node):
            raise TransformError("relational swap preconditions not met")
        left = node.children[cand.position - 1]
        right = node.children[cand.position]
        edits = [
            (left.start, left.end, _node_text(right, tokens)),
            (right.start, right.end, _node_text(left, tokens)),
        ]
        if cand.kind == REL_SWAP:
            op_tok = node.op_tokens[cand.position - 1]
            edits.append((op_tok, op_tok + 1, MIRROR[node.op]))
        meta = {"position": cand.position, "operator": node.op}
        return _region_record(parsed, cand, node, edits, meta)
    if cand.kind == PAREN_ADD:
        for t in cand.targets:
            if t.parent is not node or t.kind == PAREN:
                raise TransformError("bad parenthesis target")
        if node.kind == PAREN:
            raise TransformError("would create double parentheses")
        edits = [(t.start, t.end, "(" + _node_text(t, tokens) + ")") for t in cand.targets]
        meta = {"position": cand.position, "n_targets": len(cand.targets), "symmetric_group": len(cand.targets) > 1}
        return _region_record(parsed, cand, node, edits, meta)
    if cand.kind == PAREN_REMOVE:
        (target,) = cand.targets
        if target.kind != PAREN:
            raise TransformError("not a parenthesized expression")
        inner = "".join(t.text for t in tokens[target.start + 1 : target.end - 1])
        edits = [(target.start, target.end, inner)]
        meta = {"position": 0, "symmetry_broken": _breaks_symmetry(target)}
        return _region_record(parsed, cand, node, edits, meta)
    raise TransformError(f"unknown expression transform {cand.kind!r}")


def _breaks_symmetry(target: ExprNode) -> bool:
    parent = target.parent
    if parent is None or parent.kind != INFIX or parent.op not in ("&&", "||"):
        return False
    return sum(1 for k in parent.children if k.kind == PAREN) > 1


# -- identifier shuffles -------------------------------------------------------

def shuffleable_locals(method: MethodScope) -> List:
    """Locals that may take part in a rename shuffle (may exceed the cap)."""
    out = []
    for d in method.locals:
        if d.decl_count_in_method != 1:
            continue
        t = d.declared_type
        if t in _PRIMITIVES or t == "String" or (_SIMPLE_TYPE.match(t) and t != "var"):
            out.append(d)
    return out


def _derangement(names: List[str], rng) -> List[str]:
    if len(names) < 2:
        return list(names)
    while True:
        perm = list(names)
        rng.shuffle(perm)
        if all(a != b for a, b in zip(names, perm)):
            return perm


def shuffle_candidates(parsed: ParsedFile, excluded_lines: Iterable[int] = ()) -> List[MethodScope]:
    """Methods eligible for rename shuffles."""
    excluded = set(excluded_lines)
    out = []
    for m in parsed.methods:
        if m.name in EXCLUDED_SHUFFLE_METHODS or m.contains_lambda or m.contains_class:
            continue
        eligible = shuffleable_locals(m)
        if len(eligible) < 2 or len(eligible) > MAX_SHUFFLE_LOCALS:
            continue
        if excluded:
            lines = {parsed.tokens[i].line for d in eligible for i in d.positions}
            if lines & excluded:
                continue
        out.append(m)
    return out


def _resolution_map(parsed: ParsedFile, method: MethodScope) -> Dict[int, Optional[int]]:
    tokens = parsed.tokens
    out = {}
    for idx in method.occurrences:
        d = method.resolve(tokens[idx].text, idx)
        out[idx] = None if d is None else d.decl_token
    return out


def shuffle_identifiers(
    parsed: ParsedFile, method: MethodScope, mode: str, seed: int, key: Optional[str] = None
) -> Optional[TransformRecord]:
    """Permute local names within ``method``; None when fewer than 2 can move.

    ``key`` names the file in the seed derivation (default: its path).
    """
    if mode in ("within", SHUFFLE_WITHIN):
        kind = SHUFFLE_WITHIN
    elif mode in ("between", SHUFFLE_BETWEEN):
        kind = SHUFFLE_BETWEEN
    else:
        raise TransformError(f"unknown shuffle mode {mode!r}")
    if method.name in EXCLUDED_SHUFFLE_METHODS or method.contains_lambda or method.contains_class:
        return None
    eligible = shuffleable_locals(method)
    if len(eligible) > MAX_SHUFFLE_LOCALS:
        return None
    rng = rng_for(seed, key if key is not None else parsed.path, method.header_start, kind)
    if kind == SHUFFLE_WITHIN:
        groups: Dict[str, list] = {}
        for d in eligible:
            groups.setdefault(d.declared_type, []).append(d)
        groups_list = [g for _, g in sorted(groups.items()) if len(g) >= 2]
    else:
        groups_list = [eligible] if len(eligible) >= 2 else []
    if not groups_list:
        return None
    rename: Dict[str, str] = {}
    for g in groups_list:
        names = [d.name for d in g]
        for old, new in zip(names, _derangement(names, rng)):
            rename[old] = new
    tokens = parsed.tokens
    edits = []
    moved = [d for g in groups_list for d in g]
    for d in moved:
        for idx in d.positions:
            edits.append((idx, idx + 1, rename[d.name]))
    region_start, region_end = method.header_start, method.body_end
    original = "".join(t.text for t in tokens[region_start:region_end])
    transformed = _splice(tokens, region_start, region_end, edits)
    if transformed == original:
        return None
    s, e = parsed.char_span(region_start, region_end)
    new_source = parsed.source[:s] + transformed + parsed.source[e:]
    if not rename_is_safe(parsed, method, new_source):
        log.debug("rename in %s:%s rejected by scope check", parsed.path, method.name)
        return None
    affected = sorted({tokens[idx].line for d in moved for idx in d.positions})
    # tokens pair up one-to-one modulo the renaming, so every token is shared
    shared = token_multiset(original)
    return TransformRecord(
        kind,
        parsed.path,
        (s, e),
        (tokens[region_start].line, tokens[region_end - 1].end_line),
        original,
        transformed,
        shared,
        {"num_tokens": len(moved), "parent_kind": "method", "operators": []},
        {
            "method": method.name,
            "renamed": dict(sorted(rename.items())),
            "affected_lines": affected,
            "n_locals": len(eligible),
            "scope": "lines containing a shuffled name",
        },
    )


def rename_is_safe(parsed: ParsedFile, method: MethodScope, new_source: str) -> bool:
    """Use-to-declaration map unchanged after renaming (by token position)."""
    try:
        reparsed = parse_file(new_source, parsed.path)
    except (LexError, ParseError):
        return False
    if len(reparsed.tokens) != len(parsed.tokens):
        return False
    twin = next((m for m in reparsed.methods if m.header_start == method.header_start), None)
    if twin is None:
        return False
    return _resolution_map(parsed, method) == _resolution_map(reparsed, twin)


# -- sampling ------------------------------------------------------------------

def sample_transforms(candidates: Sequence[Candidate], seed: int, path: Optional[str] = None) -> List[Candidate]:
    """Seeded per-expression subsample.

    For an expression with n candidate locations, up to n distinct variants
    are drawn without replacement. Every variant here edits one location,
    so this keeps all of them in a seeded order; the grouping matters for
    reproducibility, not for size.
    """
    groups: Dict[Tuple[int, str], List[Candidate]] = {}
    for c in candidates:
        groups.setdefault((c.site_index, c.kind), []).append(c)
    out: List[Candidate] = []
    for (si, kind), group in sorted(groups.items(), key=lambda kv: kv[0]):
        n = len(group)
        rng = rng_for(seed, path, si, kind)
        out.extend(rng.sample(group, min(n, len(group))))
    return out


def generate(
    parsed: ParsedFile,
    kinds: Sequence[str],
    seed: int,
    excluded_lines: Iterable[int] = (),
    key: Optional[str] = None,
) -> List[TransformRecord]:
    """All sampled records of the requested kinds for one file.

    Random choices are keyed by ``key`` (default: the file path); pass a
    location-independent key to make results survive moving the corpus.
    """
    excluded = set(excluded_lines)
    key = key if key is not None else parsed.path
    records: List[TransformRecord] = []
    for kind in kinds:
        if kind in SHUFFLE_KINDS:
            for m in shuffle_candidates(parsed, excluded):
                rec = shuffle_identifiers(parsed, m, kind, seed, key)
                if rec is not None:
                    records.append(rec)
            continue
        cands = find_sites(parsed, kind, excluded, validate=False)
        for c in sample_transforms(cands, seed, key):
            try:
                records.append(realize(parsed, c))
            except TransformError:
                continue
    return records
