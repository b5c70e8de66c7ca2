import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natpref.frontend import (
    LexError,
    parse_expression_text,
    parse_file,
    render,
    signature,
    tokenize,
    type_of,
)
from natpref.frontend import lexer
from natpref.frontend.expr import INFIX, NAME, OTHER, PAREN

from conftest import parsed_method


def sig_tokens(text):
    return [(t.category, t.text) for t in tokenize(text) if not t.is_trivia]


def test_tokenize_simple_statement():
    assert sig_tokens("i=i+1;") == [
        (lexer.IDENTIFIER, "i"),
        (lexer.OPERATOR, "="),
        (lexer.IDENTIFIER, "i"),
        (lexer.OPERATOR, "+"),
        (lexer.INT_LITERAL, "1"),
        (lexer.SEPARATOR, ";"),
    ]


def test_unsigned_shift_is_one_token():
    assert [t for _, t in sig_tokens("a >>> 32")] == ["a", ">>>", "32"]


@pytest.mark.parametrize(
    "text, category",
    [
        ("1.0e3f", lexer.FLOAT_LITERAL),
        ("3.14", lexer.FLOAT_LITERAL),
        (".5", lexer.FLOAT_LITERAL),
        ("2d", lexer.FLOAT_LITERAL),
        ("0x1F", lexer.INT_LITERAL),
        ("10L", lexer.INT_LITERAL),
        ("1_000", lexer.INT_LITERAL),
        ("'c'", lexer.CHAR_LITERAL),
        ('"s"', lexer.STRING_LITERAL),
        ("true", lexer.BOOL_LITERAL),
        ("null", lexer.NULL_LITERAL),
        ("while", lexer.KEYWORD),
    ],
)
def test_literal_categories(text, category):
    (tok,) = sig_tokens(text)
    assert tok == (category, text)


@pytest.mark.parametrize("bad", ['String s = "open;', "/* never closed", "char c = 'x"])
def test_unterminated_raises(bad):
    with pytest.raises(LexError):
        tokenize(bad)


def test_round_trip_keeps_comments_and_whitespace():
    src = 'class A {\n\t// note\r\n  int x = 1; /* b */ String s = "a\\"b";\n}\n'
    assert render(tokenize(src)) == src


def test_round_trip_on_generated_files(synth_corpus):
    _, paths = synth_corpus
    for p in paths:
        src = p.read_text()
        assert render(tokenize(src)) == src


_PIECES = st.sampled_from(
    ["a", "b1", "_x", "1", "0x2f", "2.5f", " ", "\n", "\t", "+", "-", ">>>", ">>=", "(", ")", "{", "}",
     ";", "==", "!", '"str"', "'c'", "// c\n", "/* k */", "int", "::", "->", "@"]
)


@settings(max_examples=300, deadline=None)
@given(st.lists(_PIECES, max_size=40))
def test_round_trip_property(pieces):
    spaced = " ".join(pieces)
    assert render(tokenize(spaced)) == spaced
    # glued pieces may form malformed tokens such as "1a"; those must raise
    glued = "".join(pieces)
    try:
        toks = tokenize(glued)
    except LexError:
        return
    assert render(toks) == glued


def test_precedence():
    node, _ = parse_expression_text("a + b * c")
    assert (node.kind, node.op) == (INFIX, "+")
    left, right = node.children
    assert left.kind == NAME
    assert (right.kind, right.op) == (INFIX, "*")


def test_parenthesized_operand():
    node, _ = parse_expression_text("a + (b * c)")
    paren = node.children[1]
    assert paren.kind == PAREN
    assert (paren.children[0].kind, paren.children[0].op) == (INFIX, "*")


def test_parens_only_differ_when_erased():
    a, ta = parse_expression_text("(a + b) + c")
    b, tb = parse_expression_text("a + b + c")
    c, tc = parse_expression_text("a + (b + c)")
    assert signature(a, ta) != signature(b, tb)
    assert signature(a, ta, erase_parens=True) == signature(b, tb, erase_parens=True)
    assert signature(c, tc, erase_parens=True) != signature(b, tb, erase_parens=True)


def test_expression_round_trip():
    text = "(a+b)-(c+d)"
    node, toks = parse_expression_text(text)
    assert node.text(toks) == text


def test_method_locals():
    pf = parsed_method("int a;\nint b;\na = b;")
    (m,) = pf.methods
    assert [(d.name, d.declared_type) for d in m.locals] == [("a", "int"), ("b", "int")]
    lo, hi = m.body_span
    assert all(lo <= d.decl_token < hi for d in m.locals)


@pytest.mark.parametrize("stmt", ["Function<Integer, Integer> f = x -> x+1;", "list.forEach(System.out::println);"])
def test_lambda_detection(stmt):
    pf = parsed_method("int k = 0;\n" + stmt)
    assert pf.methods[0].contains_lambda


def test_double_declaration_counted():
    pf = parsed_method("for (int i = 0; i < 3; i++) {}\nfor (int i = 0; i < 4; i++) {}")
    counts = {d.decl_count_in_method for d in pf.methods[0].locals if d.name == "i"}
    assert counts == {2}


def test_uses_resolve_to_innermost_declaration():
    pf = parsed_method("int a = 1;\nint b = a + 2;\nreturn b;")
    m = pf.methods[0]
    a = next(d for d in m.locals if d.name == "a")
    assert a.positions[0] == a.decl_token
    assert len(a.positions) == 2
    for idx in a.positions:
        assert m.resolve("a", idx) is a


def test_types():
    pf = parsed_method("long length = 5;\nint k = this.size + length;\nint q = 10;")
    m = pf.methods[0]
    roots = {s.root.text(pf.tokens): s.root for s in pf.sites}
    assert type_of(roots["10"], m, pf.tokens) == "int"
    infix = roots["this.size + length"]
    field, name = infix.children
    assert type_of(name, m, pf.tokens) == "long"
    assert type_of(field, m, pf.tokens) == "unknown"


def test_unparseable_region_is_opaque():
    pf = parsed_method("int a = 1;\nx = a @@ b;\nint c = a + 1;")
    kinds = {s.root.text(pf.tokens): s.root.kind for s in pf.sites}
    assert kinds["x = a @@ b"] == OTHER
    assert kinds["a + 1"] == INFIX


def test_line_span_covers_tokens(synth_parsed):
    for pf in synth_parsed[:5]:
        for site in pf.sites:
            lo, hi = site.line_span
            for t in pf.tokens[site.root.start : site.root.end]:
                assert lo <= t.line and t.end_line <= hi


def test_parse_file_keeps_path():
    pf = parse_file("class A {}", "A.java")
    assert pf.path == "A.java" and pf.sites == []
