"""Indented text dump of tokens and expression trees, for debugging and golden files."""

from __future__ import annotations

from typing import List, Optional

from .expr import ExprNode
from .lexer import Token
from .structure import MethodScope, ParsedFile
from .typecheck import type_of


def _label(node: ExprNode, scope, tokens: List[Token]) -> str:
    parts = [node.kind]
    if node.op is not None:
        parts.append(repr(node.op))
    if node.postfix:
        parts.append("postfix")
    parts.append(f"<{type_of(node, scope, tokens)}>")
    if not node.children or node.is_opaque:
        parts.append(repr(node.text(tokens).strip()))
    return " ".join(parts)


def _tree(node: ExprNode, scope: Optional[MethodScope], tokens: List[Token], depth: int, out: List[str]) -> None:
    out.append("  " * depth + _label(node, scope, tokens))
    if node.is_opaque:
        return
    for child in node.children:
        _tree(child, scope, tokens, depth + 1, out)


def dump(parsed: ParsedFile, include_trivia: bool = False) -> str:
    """Tokens (one per line, ``line:col category text``) then every expression site."""
    out = ["tokens:"]
    for tok in parsed.tokens:
        if tok.is_trivia and not include_trivia:
            continue
        out.append(f"  {tok.line}:{tok.col} {tok.category} {tok.text!r}")
    out.append("expressions:")
    for site in parsed.sites:
        method = site.method.name if site.method else "-"
        out.append(f"  site lines {site.line_span[0]}-{site.line_span[1]} context={site.context} method={method}")
        _tree(site.root, site.method, parsed.tokens, 2, out)
    return "\n".join(out) + "\n"
