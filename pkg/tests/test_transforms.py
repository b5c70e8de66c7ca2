from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natpref import transforms as tf
from natpref.frontend import parse_expression_text, parse_file, signature

import java_eval as je
from conftest import method_source, parsed_method


def records(body, params, kind, **kw):
    pf = parsed_method(body, params, **kw)
    return [tf.realize(pf, c) for c in tf.find_sites(pf, kind)]


def pairs(body, params, kind):
    return [(r.original_text, r.transformed_text) for r in records(body, params, kind)]


@pytest.mark.parametrize(
    "body, params, expected",
    [
        ("i = i+1;", "int i", [("i+1", "1+i")]),
        ("int k = a * b;", "int a, int b", [("a * b", "b * a")]),
        ("int k = x + y + z;", "int x, int y, int z", [("x + y + z", "y + x + z"), ("x + y + z", "x + z + y")]),
        ("double d = u * 2.0;", "double u", [("u * 2.0", "2.0 * u")]),
    ],
)
def test_arithmetic_swap_examples(body, params, expected):
    assert pairs(body, params, tf.ARITH_SWAP) == expected


@pytest.mark.parametrize(
    "body, params",
    [
        ("int k = f() + 1;", "int a"),
        ('String k = s + t;', "String s, String t"),
        ("int k = this.size + 1;", ""),
        ("int k = a - b;", "int a, int b"),
        ("int k = a++ + b;", "int a, int b"),
        # mixed int/long chains could change where overflow happens
        ("long k = a + b + c;", "int a, long b, int c"),
    ],
)
def test_arithmetic_swap_rejected(body, params):
    assert pairs(body, params, tf.ARITH_SWAP) == []


@pytest.mark.parametrize(
    "expr, swapped",
    [("a <= b", "b >= a"), ("a != b", "b != a"), ("i < length", "length > i"), ("a == b", "b == a"), ("a > b", "b < a")],
)
def test_relational_swap_examples(expr, swapped):
    assert pairs(f"boolean k = {expr};", "int a, int b, int i, int length", tf.REL_SWAP) == [(expr, swapped)]


def test_relational_swap_skips_side_effects():
    assert pairs("boolean k = next() < a;", "int a", tf.REL_SWAP) == []
    assert pairs("boolean k = a++ < b;", "int a, int b", tf.REL_SWAP) == []


def test_paren_add_examples():
    assert pairs("int k = a + b * c;", "int a, int b, int c", tf.PAREN_ADD) == [("a + b * c", "a + (b * c)")]
    assert pairs("int k = (x);", "int x", tf.PAREN_ADD) == []
    assert pairs("int k = a + b;", "int a, int b", tf.PAREN_ADD) == []


def test_paren_add_symmetric_boolean():
    (rec,) = records("boolean k = a == b || b == c;", "int a, int b, int c", tf.PAREN_ADD)
    assert rec.transformed_text == "(a == b) || (b == c)"
    assert rec.meta["symmetric_group"] and rec.meta["n_targets"] == 2


@pytest.mark.parametrize(
    "body, params, expected",
    [
        ("double seconds = time / (1000.0);", "long time", [("time / (1000.0)", "time / 1000.0")]),
        ("c1 |= (c2 >> 4) & 0x0f;", "int c1, int c2", [("(c2 >> 4) & 0x0f", "c2 >> 4 & 0x0f")]),
        ("int k = (a + b) * c;", "int a, int b, int c", []),
        ("int k = a - (b - c);", "int a, int b, int c", []),
    ],
)
def test_paren_remove_examples(body, params, expected):
    assert pairs(body, params, tf.PAREN_REMOVE) == expected


def test_paren_remove_flags_broken_symmetry():
    (rec, rec2) = records("boolean k = (a == b) || (b == c);", "int a, int b, int c", tf.PAREN_REMOVE)
    assert rec.meta["symmetry_broken"] and rec2.meta["symmetry_broken"]


def test_record_fields():
    src = method_source("int k = a * b;", "int a, int b")
    pf = parse_file(src, "Demo.java")
    (rec,) = [tf.realize(pf, c) for c in tf.find_sites(pf, tf.ARITH_SWAP)]
    s, e = rec.span
    assert src[s:e] == rec.original_text
    assert rec.shared_tokens == Counter({"a": 1, "*": 1, "b": 1})
    assert rec.covariates["num_tokens"] == 3 and rec.covariates["operators"] == ["*"]
    assert rec.apply(src) == src.replace("a * b", "b * a")
    assert tf.TransformRecord.from_dict(rec.to_dict()) == rec
    with pytest.raises(tf.TransformError):
        rec.apply(src.replace("a * b", "a*b"))


def test_bad_position_raises():
    pf = parsed_method("int k = a * b;", "int a, int b")
    node = pf.sites[0].root
    with pytest.raises(tf.TransformError):
        tf.arithmetic_swap(pf, pf.sites[0], node, 5)


def test_excluded_lines_are_skipped():
    pf = parsed_method("int k = a * b;\nint q = a + b;", "int a, int b")
    line = next(t.line for t in pf.tokens if t.text == "q")
    got = [tf.realize(pf, c).original_text for c in tf.find_sites(pf, tf.ARITH_SWAP, excluded_lines={line})]
    assert got == ["a * b"]


# -- shuffles ------------------------------------------------------------------

def shuffle(body, mode, seed=0, name="run"):
    pf = parsed_method(body, name=name)
    return tf.shuffle_identifiers(pf, pf.methods[0], mode, seed)


def test_shuffle_within_swaps_same_type():
    rec = shuffle("int a = 1;\nint b = 2;\nint c = a - b;\nreturn c;", "within")
    assert rec is not None
    assert set(rec.meta["renamed"]) == {"a", "b", "c"}
    assert all(k != v for k, v in rec.meta["renamed"].items())


def test_shuffle_within_needs_a_type_group():
    assert shuffle("int a = 1;\nfloat b = 2f;\nb = a;", "within") is None


def test_shuffle_between_mixes_types():
    rec = shuffle('int a = 1;\nString s = "x";\ns = s + a;', "between")
    assert rec.meta["renamed"] == {"a": "s", "s": "a"}
    assert "String a = " in rec.transformed_text and "int s = 1" in rec.transformed_text


@pytest.mark.parametrize(
    "body, name",
    [
        ("int a = 1;\nint b = 2;\nRunnable r = () -> {};", "run"),
        ("int a = 1;\nint b = 2;", "equals"),
        ("int a = 1;\nint b = 2;", "hashCode"),
        ("int a = 1;\nint b = 2;\nfor (int a2 = 0; a2 < 1; a2++) {}\nfor (int a2 = 0; a2 < 1; a2++) {}", "skip"),
    ],
)
def test_shuffle_exclusions(body, name):
    rec = shuffle(body, "within", name=name)
    if name == "skip":
        # the twice-declared name is ineligible but a, b still move
        assert rec is not None and "a2" not in rec.meta["renamed"]
    else:
        assert rec is None


def test_shuffle_equals_ignore_case_is_not_excluded():
    assert shuffle("int a = 1;\nint b = 2;\nint c = a + b;", "within", name="equalsIgnoreCase") is not None


def test_shuffle_cap_on_locals():
    body = "\n".join(f"int v{i} = {i};" for i in range(11))
    assert shuffle(body, "within") is None
    body = "\n".join(f"int v{i} = {i};" for i in range(10))
    assert shuffle(body, "within") is not None


def test_shuffle_rejects_capture_of_field():
    # the first "b" is the field; renaming a to b would capture it
    src = (
        "class A {\n    int b;\n    void f() {\n        int a = 1;\n        b = a + 1;\n"
        "        int b = 2;\n        a = b;\n    }\n}\n"
    )
    pf = parse_file(src, "A.java")
    assert {d.name for d in tf.shuffleable_locals(pf.methods[0])} == {"a", "b"}
    assert tf.shuffle_identifiers(pf, pf.methods[0], "within", 0) is None


def test_shuffle_deterministic():
    body = "int a = 1;\nint b = 2;\nint c = 3;\nint d = a + b + c;"
    assert shuffle(body, "within", 4).to_dict() == shuffle(body, "within", 4).to_dict()


# -- sampling ------------------------------------------------------------------

def test_sampling_counts():
    pf = parsed_method("int k = a * b;", "int a, int b")
    assert len(tf.sample_transforms(tf.find_sites(pf, tf.ARITH_SWAP), 0)) == 1
    pf = parsed_method("int k = a + b * c - d / e;", "int a, int b, int c, int d, int e")
    cands = tf.find_sites(pf, tf.PAREN_ADD)
    # b * c, d / e and the left operand a + b * c of the subtraction
    assert len(cands) == 3
    picked = tf.sample_transforms(cands, 7)
    assert 1 <= len(picked) <= len(cands)
    assert tf.sample_transforms(cands, 7) == picked


def test_generate_deterministic(synth_parsed):
    pf = synth_parsed[0]
    a = [r.to_dict() for r in tf.generate(pf, tf.ALL_KINDS, 11)]
    b = [r.to_dict() for r in tf.generate(pf, tf.ALL_KINDS, 11)]
    assert a == b and a


# -- properties ----------------------------------------------------------------

_NAMES = ["a", "b", "c", "n"]


def _exprs():
    leaf = st.sampled_from(_NAMES + ["1", "7", "0x1f", "2147483647"])

    def extend(inner):
        ops = st.sampled_from(["+", "*", "-", "/", "%", "<<", ">>>", "&", "^"])
        return st.one_of(
            st.builds(lambda l, o, r: f"{l} {o} {r}", inner, ops, inner),
            st.builds(lambda e: f"({e})", inner),
            st.builds(lambda e: f"-{e}", inner),
        )

    return st.recursive(leaf, extend, max_leaves=6)


@settings(max_examples=150, deadline=None)
@given(_exprs(), st.sampled_from(["int", "long"]))
def test_swaps_preserve_value(expr, typ):
    body = f"{typ} k = {expr};"
    params = ", ".join(f"{typ} {n}" for n in _NAMES)
    types = {n: typ for n in _NAMES}
    for rec in records(body, params, tf.ARITH_SWAP) + records(f"boolean q = {expr} < a;", params, tf.REL_SWAP):
        env = je.Env(types, 300, 1)
        a, b = je.parse(rec.original_text), je.parse(rec.transformed_text)
        assert je.same_results(je.evaluate(a, env), je.evaluate(b, env)), (rec.original_text, rec.transformed_text)


@settings(max_examples=150, deadline=None)
@given(_exprs())
def test_paren_edits_keep_tree(expr):
    params = ", ".join(f"int {n}" for n in _NAMES)
    for kind in (tf.PAREN_ADD, tf.PAREN_REMOVE):
        for rec in records(f"int k = {expr};", params, kind):
            x, tx = parse_expression_text(rec.original_text)
            y, ty = parse_expression_text(rec.transformed_text)
            assert signature(x, tx, erase_parens=True) == signature(y, ty, erase_parens=True)
            removed = sum(rec.shared_tokens.values())
            total = sum(tf.token_multiset(rec.original_text).values())
            assert (total - removed) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(_exprs())
def test_swap_shares_every_token(expr):
    params = ", ".join(f"int {n}" for n in _NAMES)
    for rec in records(f"int k = {expr};", params, tf.ARITH_SWAP):
        assert rec.shared_tokens == tf.token_multiset(rec.original_text)
