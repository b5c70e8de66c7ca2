import math
import shutil
from collections import Counter

import pytest

from natpref import experiment as ex
from natpref import lm
from natpref import transforms as tf
from natpref.frontend import parse_file

from conftest import method_source


@pytest.fixture(scope="module")
def models(synth_corpus):
    _, paths = synth_corpus
    sources = [p.read_text() for p in paths[:12]]
    plain = lm.train(sources, order=4)
    abstracted = lm.train(sources, order=4, abstracted=True)
    return {
        "global": ex.Scorer(plain),
        "cache": ex.Scorer(plain, 0.5),
        "global_abs": ex.Scorer(abstracted),
        "cache_abs": ex.Scorer(abstracted, 0.5),
    }


@pytest.fixture(scope="module")
def test_file(synth_corpus):
    _, paths = synth_corpus
    src = paths[-1].read_text()
    return src, parse_file(src, str(paths[-1]))


def _identity(rec):
    return tf.TransformRecord(rec.kind, rec.file, rec.span, rec.lines, rec.original_text, rec.original_text,
                              tf.token_multiset(rec.original_text), dict(rec.covariates), dict(rec.meta))


def _inverse(rec, source):
    new_source = rec.apply(source)
    s = rec.span[0]
    inv = tf.TransformRecord(rec.kind, rec.file, (s, s + len(rec.transformed_text)), rec.lines, rec.transformed_text,
                             rec.original_text, rec.shared_tokens, dict(rec.covariates), dict(rec.meta))
    return new_source, inv


def test_identity_gives_zero(models, test_file):
    src, pf = test_file
    recs = [_identity(r) for r in tf.generate(pf, tf.EXPRESSION_KINDS, 0)]
    assert recs
    for d in ex.score_file_records(src, recs, models):
        assert d.delta == 0.0 and d.line_delta == 0.0


def test_antisymmetry(models, test_file):
    src, pf = test_file
    recs = tf.generate(pf, tf.ALL_KINDS, 0)[::7]
    forward = ex.score_file_records(src, recs, models)
    for rec in recs:
        new_source, inv = _inverse(rec, src)
        back = ex.score_file_records(new_source, [inv], models)
        for b in back:
            f = next(d for d in forward if d.span == rec.span and d.model_id == b.model_id
                     and d.transformed_line == b.original_line and d.kind == rec.kind)
            assert b.delta == pytest.approx(-f.delta, abs=1e-9)


def test_zero_cache_weight_is_global(models, test_file):
    src, pf = test_file
    recs = tf.generate(pf, tf.EXPRESSION_KINDS, 0)
    scorers = {"global": models["global"], "cache": ex.Scorer(models["global"].model, 0.0)}
    out = ex.score_file_records(src, recs, scorers)
    by_model = {m: [d.delta for d in out if d.model_id == m] for m in scorers}
    assert by_model["global"] == pytest.approx(by_model["cache"], abs=1e-12)


def test_delta_is_difference_of_shared_means(models, test_file):
    src, pf = test_file
    recs = tf.generate(pf, tf.EXPRESSION_KINDS, 0)[:40]
    for d in ex.score_file_records(src, recs, models):
        assert d.delta == d.mean_surprisal_original - d.mean_surprisal_transformed
        assert d.n_shared > 0
    for rec in recs:
        new_source = rec.apply(src)
        for mid, scorer in models.items():
            o = ex.shared_token_surprisal(src, (rec.span[0], rec.span[0] + len(rec.original_text)), rec.shared_tokens, scorer)
            t = ex.shared_token_surprisal(new_source, rec.edit_span_transformed, rec.shared_tokens, scorer)
            (d,) = [x for x in ex.score_file_records(src, [rec], {mid: scorer})]
            assert d.delta == pytest.approx(o - t, abs=1e-12)


def test_shared_counts(models, test_file):
    src, pf = test_file
    for rec in tf.generate(pf, tf.EXPRESSION_KINDS, 0):
        total = sum(tf.token_multiset(rec.original_text).values())
        shared = sum(rec.shared_tokens.values())
        if rec.kind in (tf.ARITH_SWAP, tf.REL_SWAP):
            # the mirrored operator of a relational swap is the one token lost
            assert total - shared == (1 if rec.kind == tf.REL_SWAP and rec.meta["operator"] not in ("==", "!=") else 0)
        else:
            assert total - shared in (0, 2 * rec.meta.get("n_targets", 1))


def test_swap_example_scores_all_tokens(models):
    src = method_source("int k = a + b;", "int a, int b")
    pf = parse_file(src, "Demo.java")
    (rec,) = tf.generate(pf, [tf.ARITH_SWAP], 0)
    assert rec.shared_tokens == Counter({"a": 1, "+": 1, "b": 1})
    (d,) = ex.score_file_records(src, [rec], {"global": models["global"]})
    assert d.n_shared == 3


def test_abstracted_models_skip_shuffles(models, test_file):
    src, pf = test_file
    recs = tf.generate(pf, tf.SHUFFLE_KINDS, 0)
    assert recs
    out = ex.score_file_records(src, recs, models)
    assert {d.model_id for d in out} == {"global", "cache"}
    for d in out:
        assert d.meta["scope"] == "lines containing a shuffled name"


def test_run_experiment_and_roundtrip(models, synth_corpus, tmp_path):
    _, paths = synth_corpus
    deltas, records = ex.run_experiment([str(p) for p in paths[12:]], models, tf.ALL_KINDS, seed=0)
    assert deltas and records
    assert {d.kind for d in deltas} == set(tf.ALL_KINDS)
    ex.write_jsonl(deltas, tmp_path / "d.jsonl")
    back = [ex.DeltaRecord.from_dict(r) for r in ex.read_jsonl(tmp_path / "d.jsonl")]
    assert [b.to_dict() for b in back] == [d.to_dict() for d in deltas]


def test_aggregate_zero_and_na():
    recs = [{"kind": "rel_swap", "model_id": "global", "delta": 0.0} for _ in range(5)]
    recs.append({"kind": "arith_swap", "model_id": "cache", "delta": 1.5})
    cells = ex.aggregate(recs)
    assert [(c.kind, c.model_id) for c in cells] == [("arith_swap", "cache"), ("rel_swap", "global")]
    na, zero = cells
    assert na.n == 1 and math.isnan(na.p_value)
    assert zero.median == 0.0 and zero.p_value == 1.0
    table = ex.format_table(cells)
    assert table.splitlines()[0].split("\t") == ex.TABLE_HEADER
    assert "NA" in table.splitlines()[1]


def test_wide_table_layout():
    recs = [{"kind": k, "model_id": m, "delta": -1.0 - 0.01 * i}
            for k in ("arith_swap", "rel_swap") for m in ("global", "cache") for i in range(10)]
    recs += [{"kind": "shuffle_within", "model_id": "global", "delta": 0.01 * (i - 5)} for i in range(10)]
    lines = ex.format_wide(ex.aggregate(recs)).splitlines()
    assert lines[0] == "kind\tglobal\tcache"
    assert [l.split("\t")[0] for l in lines[1:]] == ["arith_swap", "rel_swap", "shuffle_within"]
    assert lines[3].endswith("--") and "°" in lines[3]


def test_seed_keys_make_results_location_independent(models, synth_corpus, tmp_path):
    root, paths = synth_corpus
    chosen = paths[12:15]
    copies = []
    for p in chosen:
        dst = tmp_path / p.relative_to(root)
        dst.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy(p, dst)
        copies.append(dst)
    runs = []
    for files in (chosen, copies):
        keys = {str(f): f"k{i}" for i, f in enumerate(files)}
        deltas, _ = ex.run_experiment([str(f) for f in files], {"global": models["global"]}, tf.SHUFFLE_KINDS, 0, keys=keys)
        runs.append([(d.kind, d.delta, d.transformed_line) for d in deltas])
    assert runs[0] and runs[0] == runs[1]
