import argparse
import json
from pathlib import Path

import pytest

from natpref import cli

REPO = Path(__file__).resolve().parents[1]
DEMO = REPO / "demos" / "corpus"
GOLDEN = Path(__file__).parent / "golden"
# every deterministic artifact of a pipeline run
ARTIFACTS = ["manifest.jsonl", "transforms.jsonl", "deltas.jsonl", "table.tsv", "table_wide.tsv", "table_line.tsv",
             "regression.json", "pairs.jsonl", "answer_key.json"]


def demo_config(tmp_path, **extra):
    cfg = {"roots": sorted(str(p) for p in DEMO.iterdir()), "split_ratio": 0.5, "min_category_count": 10}
    cfg.update(extra)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return path


@pytest.fixture(scope="module")
def demo_run(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("run")
    cfg = demo_config(tmp)
    assert cli.main(["pipeline", "--config", str(cfg), "--out-dir", str(tmp / "out")]) == 0
    return tmp / "out"


def test_help_exits_zero(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["--help"])
    assert info.value.code == 0
    assert "pipeline" in capsys.readouterr().out


def _walk(parser):
    yield parser
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                yield from _walk(sub)


def test_every_flag_documented():
    for parser in _walk(cli.build_parser()):
        for action in parser._actions:
            if action.option_strings:
                assert action.help, f"{parser.prog} {action.option_strings} lacks help"


def test_pipeline_outputs(demo_run):
    for name in ARTIFACTS + ["config.resolved.json"]:
        assert (demo_run / name).is_file(), name
    assert not (demo_run / "FAILED_STAGE").exists()
    resolved = json.loads((demo_run / "config.resolved.json").read_text())
    assert resolved["seed"] == 0 and resolved["order"] == 6
    assert sorted(p.name for p in (demo_run / "forms").glob("*.json")) == ["form-000.json", "form-001.json", "form-002.json"]
    wide = (demo_run / "table_wide.tsv").read_text().splitlines()
    assert len(wide) == 7


def test_pipeline_is_reproducible(demo_run, tmp_path):
    cfg = demo_config(tmp_path)
    assert cli.main(["pipeline", "--config", str(cfg), "--out-dir", str(tmp_path / "again")]) == 0
    for name in ARTIFACTS:
        assert (tmp_path / "again" / name).read_bytes() == (demo_run / name).read_bytes(), name
    resolved = [json.loads((d / "config.resolved.json").read_text()) for d in (demo_run, tmp_path / "again")]
    for r in resolved:
        r.pop("out_dir")
    assert resolved[0] == resolved[1]
    for form in (demo_run / "forms").iterdir():
        assert (tmp_path / "again" / "forms" / form.name).read_bytes() == form.read_bytes()


def test_missing_model_file_fails_in_experiment(tmp_path, capsys):
    cfg = demo_config(tmp_path, model_paths={"plain": str(tmp_path / "absent.bin")}, models=["global"])
    out = tmp_path / "out"
    code = cli.main(["pipeline", "--config", str(cfg), "--out-dir", str(out)])
    assert code == cli.EXIT_DATA
    assert "stage experiment" in capsys.readouterr().err
    assert (out / "FAILED_STAGE").read_text().splitlines()[0] == "experiment"
    # finished stages keep their outputs
    assert (out / "manifest.jsonl").is_file()


@pytest.mark.parametrize(
    "extra",
    [{"lambda_jm": 1.5}, {"order": 0}, {"kinds": ["rotate"]}, {"bogus_key": 1}, {"models": ["lstm"]}],
)
def test_config_errors(tmp_path, extra):
    cfg = demo_config(tmp_path, **extra)
    assert cli.main(["pipeline", "--config", str(cfg), "--out-dir", str(tmp_path / "o")]) == cli.EXIT_CONFIG


def test_unreadable_config(tmp_path):
    bad = tmp_path / "c.json"
    bad.write_text("{not json")
    assert cli.main(["pipeline", "--config", str(bad)]) == cli.EXIT_CONFIG
    assert cli.main(["pipeline", "--config", str(tmp_path / "none.json")]) == cli.EXIT_CONFIG


def test_config_file_overrides_flags(tmp_path):
    cfg = cli.load_config(str(demo_config(tmp_path, seed=11)), {"seed": 3, "roots": ["x"]})
    assert cfg.seed == 11 and cfg.roots != ["x"]


def test_missing_root_is_data_error(tmp_path):
    assert cli.main(["pipeline", "--root", str(tmp_path / "nowhere"), "--out-dir", str(tmp_path / "o")]) == cli.EXIT_DATA
    assert (tmp_path / "o" / "FAILED_STAGE").read_text().startswith("corpus")


def test_internal_error(tmp_path, monkeypatch):
    def boom(*a, **k):
        raise RuntimeError("unexpected")

    monkeypatch.setattr(cli.ex, "aggregate", boom)
    cfg = demo_config(tmp_path, models=["global"], kinds=["rel_swap"])
    out = tmp_path / "o"
    assert cli.main(["pipeline", "--config", str(cfg), "--out-dir", str(out)]) == cli.EXIT_INTERNAL
    assert (out / "FAILED_STAGE").read_text().splitlines()[0] == "stats"


def test_corrupt_model_is_data_error(tmp_path):
    model = tmp_path / "m.bin"
    model.write_bytes(b"garbage")
    src = next(DEMO.rglob("*.java"))
    assert cli.main(["lm", "score", "--model", str(model), "--file", str(src)]) == cli.EXIT_DATA


def test_frontend_dump_golden(tmp_path):
    out = tmp_path / "dump.txt"
    assert cli.main(["frontend", "dump", "--file", str(GOLDEN / "Ternary.java"), "--out", str(out)]) == 0
    assert out.read_text() == (GOLDEN / "Ternary.dump.txt").read_text()


def test_subcommands_chain(tmp_path, capsys):
    t = tmp_path
    roots = sum((["--root", str(p)] for p in sorted(DEMO.iterdir())), [])
    steps = [
        ["corpus", "ingest", *roots, "--out", str(t / "m.jsonl")],
        ["corpus", "split", "--manifest", str(t / "m.jsonl"), "--ratio", "0.5", "--seed", "1"],
        ["lm", "train", "--manifest", str(t / "m.jsonl"), "--order", "4", "--out", str(t / "plain.bin")],
        ["lm", "score", "--model", str(t / "plain.bin"), "--file", str(next(DEMO.rglob("*.java")))],
        ["transform", "run", "--manifest", str(t / "m.jsonl"), "--kind", "rel_swap,paren_add", "--out", str(t / "tr.jsonl")],
        ["experiment", "run", "--test-manifest", str(t / "m.jsonl"), "--plain-model", str(t / "plain.bin"),
         "--models", "global,cache", "--kinds", "rel_swap,arith_swap,paren_add,paren_remove", "--out", str(t / "d.jsonl")],
        ["experiment", "aggregate", "--in", str(t / "d.jsonl"), "--out", str(t / "table.tsv")],
        ["experiment", "aggregate", "--in", str(t / "d.jsonl"), "--wide", "--out", str(t / "wide.tsv")],
        ["stats", "wilcoxon", "--in", str(t / "d.jsonl"), "--out", str(t / "w.json")],
        ["stats", "ols", "--in", str(t / "d.jsonl"), "--min-count", "5", "--out", str(t / "ols.json")],
        ["survey", "select", "--in", str(t / "d.jsonl"), "--per-cell", "5", "--out", str(t / "pairs.jsonl")],
        ["survey", "emit", "--pairs", str(t / "pairs.jsonl"), "--per-respondent", "10", "--n-forms", "2", "--out-dir", str(t / "forms")],
    ]
    for argv in steps:
        assert cli.main(argv) == 0, argv
    pairs = [json.loads(l) for l in (t / "pairs.jsonl").read_text().splitlines()]
    (t / "resp.csv").write_text("".join(f"r1,{p['id']},a\n" for p in pairs) + "r1,ATTN,a\n")
    assert cli.main(["survey", "analyze", "--pairs", str(t / "pairs.jsonl"), "--responses", str(t / "resp.csv"),
                     "--out", str(t / "report.json"), "--long-out", str(t / "long.jsonl")]) == 0
    report = json.loads((t / "report.json").read_text())
    assert report["n_responses"] == len(pairs)
    assert (t / "table.tsv").read_text().startswith("kind\t")


def test_experiment_refuses_split_manifest_without_test_files(tmp_path):
    roots = sum((["--root", str(p)] for p in sorted(DEMO.iterdir())[:3]), [])
    m = str(tmp_path / "m.jsonl")
    assert cli.main(["corpus", "ingest", *roots, "--out", m]) == 0
    # ceil(0.7 * 3) = 3 projects go to training, none to test
    assert cli.main(["corpus", "split", "--manifest", m, "--ratio", "0.7"]) == 0
    argv = ["experiment", "run", "--train-manifest", m, "--test-manifest", m, "--order", "3",
            "--models", "global", "--out", str(tmp_path / "d.jsonl")]
    assert cli.main(argv) == cli.EXIT_DATA
