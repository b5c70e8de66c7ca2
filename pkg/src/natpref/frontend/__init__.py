"""Java frontend: lossless lexing, expression trees, method scopes."""

from .expr import (
    ExpressionParser,
    ExprNode,
    ParseError,
    parse_expression_text,
    signature,
)
from .lexer import LexError, Token, render, significant, tokenize
from .structure import (
    ExprSite,
    MethodScope,
    ParsedFile,
    VarDecl,
    analyze_methods,
    parse_expressions,
    parse_file,
)
from .typecheck import type_of

__all__ = [
    "ExprNode",
    "ExprSite",
    "ExpressionParser",
    "LexError",
    "MethodScope",
    "ParseError",
    "ParsedFile",
    "Token",
    "VarDecl",
    "analyze_methods",
    "parse_expression_text",
    "parse_expressions",
    "parse_file",
    "render",
    "signature",
    "significant",
    "tokenize",
    "type_of",
]
