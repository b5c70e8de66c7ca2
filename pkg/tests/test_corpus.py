import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natpref import corpus as cp
from natpref.frontend import parse_file


def make_tree(root, layout):
    """``layout`` maps relative paths to file contents."""
    for rel, text in layout.items():
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)
    return root


def test_ingest_counts_and_extension(tmp_path):
    for proj in ("p1", "p2"):
        make_tree(tmp_path / proj, {f"src/A{i}.java": "class A {}" for i in range(3)} | {"README.md": "x", "src/B.jav": ""})
    m = cp.ingest([tmp_path / "p1", tmp_path / "p2"])
    assert len(m.entries) == 6
    assert all(e.path.endswith(".java") for e in m.entries)
    assert [e.path for e in m.entries] == sorted(e.path for e in m.entries)
    assert {e.project for e in m.entries} == {"p1", "p2"}


def test_ingest_missing_root(tmp_path):
    with pytest.raises(FileNotFoundError):
        cp.ingest([tmp_path / "nope"])


def test_dedup_key_is_parent_and_name():
    assert cp.dedup_key("/x/y/main/Example.java") == "main/Example.java"


def test_dedup_first_seen(tmp_path):
    make_tree(tmp_path / "p", {"a/main/Example.java": "1", "b/main/Example.java": "2", "c/util/A.java": "", "c/main/A.java": ""})
    m = cp.dedup(cp.ingest([tmp_path / "p"]))
    paths = [e.path for e in m.entries]
    assert str(tmp_path / "p/a/main/Example.java") in paths
    assert str(tmp_path / "p/b/main/Example.java") not in paths
    assert m.removed_duplicates == 1 and len(paths) == 3
    assert cp.dedup(m).entries == m.entries


def _manifest(n_projects, files=2):
    entries = [
        cp.FileEntry(f"/c/p{p:02d}/src/F{f}.java", f"p{p:02d}", f"src/F{f}.java")
        for p in range(n_projects)
        for f in range(files)
    ]
    return cp.CorpusManifest(entries)


def _train_projects(m):
    return {e.project for e in m.by_split(cp.TRAIN)}


def test_split_sizes_and_determinism():
    m = _manifest(10)
    a = cp.split_by_project(m, 0.7, seed=1)
    assert len(_train_projects(a)) == 7
    assert len({e.project for e in a.by_split(cp.TEST)}) == 3
    assert cp.split_by_project(m, 0.7, seed=1) == a
    others = {frozenset(_train_projects(cp.split_by_project(m, 0.7, seed=s))) for s in range(2, 8)}
    assert all(len(o) == 7 for o in others)
    assert len(others | {frozenset(_train_projects(a))}) > 1


@pytest.mark.parametrize("ratio", [0.0, 1.0, -0.2, 1.5])
def test_split_ratio_bounds(ratio):
    with pytest.raises(ValueError):
        cp.split_by_project(_manifest(4), ratio)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30), st.floats(0.05, 0.95), st.integers(0, 10**6))
def test_split_partition_is_exact(n, ratio, seed):
    m = cp.split_by_project(_manifest(n, files=3), ratio, seed)
    train, test = m.by_split(cp.TRAIN), m.by_split(cp.TEST)
    assert len(train) + len(test) == len(m.entries)
    for proj in m.projects:
        assert len({e.split for e in m.entries if e.project == proj}) == 1
    assert len(_train_projects(m)) in (round(ratio * n), math.ceil(ratio * n))


def test_manifest_round_trip(tmp_path):
    m = cp.split_by_project(_manifest(5), 0.6, 3)
    cp.write_manifest(m, tmp_path / "m.jsonl")
    assert cp.read_manifest(tmp_path / "m.jsonl") == m


# -- line filters ------------------------------------------------------------------

def test_keyword_lines_excluded():
    src = "int q = 7;\nreturn Objects.hashCode(x);\nif (other == null) {}\nint p = 8;\n"
    counts = cp.line_counts([src])
    assert cp.filter_test_lines(src, counts) == {2, 3}


def test_keyword_filter_is_case_sensitive():
    assert cp.filter_test_lines("int Other = 1;\n", {}) == set()


@pytest.mark.parametrize("threshold, excluded", [(100, True), (200, False)])
def test_duplicate_threshold(threshold, excluded):
    dup = "    counter++;"
    files = ["\n".join([dup] * 50), "\n".join(["  counter++;  "] * 50), "int q = 7;\n" + dup + "\n"]
    counts = cp.line_counts(files)
    assert counts["counter++;"] == 101 and counts["int q = 7;"] == 1
    got = cp.filter_test_lines(files[2], counts, threshold)
    assert got == ({2} if excluded else set())


def test_infinite_threshold_keeps_everything():
    src = "a();\n" * 500
    assert cp.filter_test_lines(src, cp.line_counts([src]), float("inf"), ()) == set()


def test_equals_hashcode_methods():
    src = (
        "class A {\n"
        "  public boolean equals(Object o) { int a = 1; int b = 2; return a == b; }\n"
        "  public int hashCode() { return 1; }\n"
        "  boolean equalsIgnoreCase(String s) { return true; }\n"
        "}\n"
    )
    pf = parse_file(src)
    stripped = cp.strip_equals_hashcode_methods(pf)
    names = {m.name for m in pf.methods if m.header_start in stripped}
    assert names == {"equals", "hashCode"}
    assert cp.strip_equals_hashcode_methods(parse_file("class B { void f() {} }")) == set()
