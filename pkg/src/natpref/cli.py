"""Command line entry point: ``natpref <group> <command> [options]``.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 internal
error. A failing ``pipeline`` run leaves its finished outputs in place and
writes ``FAILED_STAGE`` naming the stage that broke.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
import traceback
import warnings
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from . import __version__
from . import corpus as cp
from . import experiment as ex
from . import lm
from . import stats
from . import survey as sv
from . import synth
from . import transforms as tf
from .frontend.dump import dump as dump_parsed
from .frontend.expr import ParseError
from .frontend.lexer import LexError
from .frontend.structure import parse_file

log = logging.getLogger("natpref")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4


class ConfigError(Exception):
    pass


class DataError(Exception):
    pass


@dataclass
class RunConfig:
    roots: List[str] = field(default_factory=list)
    out_dir: str = "natpref-run"
    seed: int = 0
    order: int = 6
    lambda_jm: float = 0.5
    lambda_cache: float = 0.5
    dup_threshold: float = cp.DEFAULT_DUP_THRESHOLD
    split_ratio: float = 0.7
    kinds: List[str] = field(default_factory=lambda: list(tf.ALL_KINDS))
    models: List[str] = field(default_factory=lambda: list(ex.MODEL_IDS))
    model_paths: Dict[str, str] = field(default_factory=dict)
    keep_zero: bool = False
    per_cell: int = 20
    per_respondent: int = 80
    n_forms: int = 3
    min_category_count: int = 100
    workers: int = 1

    def validate(self) -> None:
        if not self.roots:
            raise ConfigError("no corpus roots given")
        if self.order < 1:
            raise ConfigError("order must be >= 1")
        if not 0.0 < self.lambda_jm < 1.0:
            raise ConfigError("lambda_jm must lie in (0, 1)")
        if not 0.0 <= self.lambda_cache < 1.0:
            raise ConfigError("lambda_cache must lie in [0, 1)")
        if not 0.0 < self.split_ratio < 1.0:
            raise ConfigError("split_ratio must lie in (0, 1)")
        bad = [k for k in self.kinds if k not in tf.ALL_KINDS]
        if bad:
            raise ConfigError(f"unknown transformation kinds: {bad}")
        bad = [m for m in self.models if m not in ex.MODEL_IDS]
        if bad:
            raise ConfigError(f"unknown model ids: {bad}")
        unknown = set(self.model_paths) - {"plain", "abstracted"}
        if unknown:
            raise ConfigError(f"model_paths keys must be 'plain' or 'abstracted', got {sorted(unknown)}")

    @classmethod
    def from_mapping(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        return cls(**data)


def load_config(path: Optional[str], overrides: dict) -> RunConfig:
    """Flags first, then the config file on top (the file wins)."""
    data = {k: v for k, v in overrides.items() if v is not None}
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                data.update(json.load(fh))
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    try:
        cfg = RunConfig.from_mapping(data)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


def _dump_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n", encoding="utf-8")


def _split_list(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [v.strip() for v in value.split(",") if v.strip()]


# -- shared stage helpers --------------------------------------------------------------

def _train_sources(manifest: cp.CorpusManifest) -> List[str]:
    entries = manifest.by_split(cp.TRAIN)
    if not entries:
        raise DataError("training split is empty")
    return [cp.read_source(e) for e in entries]


def _train_models(manifest, cfg: RunConfig, need_abs: bool, need_plain: bool) -> Dict[str, lm.NgramModel]:
    sources = _train_sources(manifest)
    out = {}
    if need_plain:
        out["plain"] = lm.train(sources, cfg.order, cfg.lambda_jm)
    if need_abs:
        out["abstracted"] = lm.train(sources, cfg.order, cfg.lambda_jm, abstracted=True, keep_zero=cfg.keep_zero)
    return out


def _scorers(models: Dict[str, lm.NgramModel], ids: Sequence[str], lambda_cache: float) -> Dict[str, ex.Scorer]:
    out = {}
    for mid in ex.MODEL_IDS:
        if mid not in ids:
            continue
        model = models["abstracted" if mid.endswith("_abs") else "plain"]
        out[mid] = ex.Scorer(model, lambda_cache if mid.startswith("cache") else None)
    return out


def _load_model(path) -> lm.NgramModel:
    if not Path(path).is_file():
        raise DataError(f"model file not found: {path}")
    try:
        return lm.load(path)
    except lm.ModelFormatError as exc:
        raise DataError(f"cannot load model {path}: {exc}") from exc


def _regression_rows(deltas: Sequence[dict], model_id: str) -> List[dict]:
    rows = []
    for d in deltas:
        if d["model_id"] != model_id or d["kind"] not in tf.EXPRESSION_KINDS:
            continue
        c = d["covariates"]
        rows.append(
            {
                "delta": d["delta"],
                "original_surprisal": c["original_surprisal"],
                "log_num_tokens": c["log_num_tokens"],
                "parent_kind": c["parent_kind"],
                "dominant_operator": c["dominant_operator"],
            }
        )
    return rows


def _ols_report(deltas: Sequence[dict], model_id: str, min_count: int) -> dict:
    rows = _regression_rows(deltas, model_id)
    try:
        y, X, names = stats.regression_design(rows, min_count=min_count)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            res = stats.ols_fit(y, X, names)
    except ValueError as exc:
        return {"model_id": model_id, "error": str(exc), "n_rows": len(rows)}
    out = res.to_dict()
    out["model_id"] = model_id
    out["warnings"] = [str(w.message) for w in caught]
    for msg in out["warnings"]:
        log.warning("regression for %s: %s", model_id, msg)
    return out


def _seed_keys(entries) -> Dict[str, str]:
    # project plus parentDir/fileName is unique after dedup and does not move with the corpus
    return {e.path: f"{e.project}/{e.dedup_key}" for e in entries}


def _write_table(cells, path) -> None:
    Path(path).write_text(ex.format_table(cells), encoding="utf-8")


# -- pipeline ----------------------------------------------------------------------------

STAGES = ("corpus", "lm", "experiment", "stats", "survey")


def run_pipeline(cfg: RunConfig) -> Path:
    """Run every stage; raises with ``stage`` attribute set on failure."""
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    marker = out / "FAILED_STAGE"
    if marker.exists():
        marker.unlink()
    _dump_json(asdict(cfg), out / "config.resolved.json")
    stage = "corpus"
    try:
        manifest = cp.ingest(cfg.roots)
        manifest = cp.dedup(manifest)
        manifest = cp.split_by_project(manifest, cfg.split_ratio, cfg.seed)
        cp.write_manifest(manifest, out / "manifest.jsonl")

        stage = "lm"
        need_abs = any(m.endswith("_abs") for m in cfg.models)
        need_plain = any(not m.endswith("_abs") for m in cfg.models)
        models: Dict[str, lm.NgramModel] = {}
        missing_plain = need_plain and "plain" not in cfg.model_paths
        missing_abs = need_abs and "abstracted" not in cfg.model_paths
        if missing_plain or missing_abs:
            models.update(_train_models(manifest, cfg, missing_abs, missing_plain))
            (out / "models").mkdir(exist_ok=True)
            for name, m in models.items():
                lm.save(m, out / "models" / f"{name}.bin")

        stage = "experiment"
        for name, path in cfg.model_paths.items():
            models[name] = _load_model(path)
        scorers = _scorers(models, cfg.models, cfg.lambda_cache)
        test_entries = manifest.by_split(cp.TEST)
        test = [e.path for e in test_entries]
        if not test:
            raise DataError("test split is empty")
        deltas, records = ex.run_experiment(test, scorers, cfg.kinds, cfg.seed, cfg.dup_threshold, keys=_seed_keys(test_entries))
        ex.write_jsonl(records, out / "transforms.jsonl")
        ex.write_jsonl(deltas, out / "deltas.jsonl")

        stage = "stats"
        dicts = [d.to_dict() for d in deltas]
        cells = ex.aggregate(dicts)
        _write_table(cells, out / "table.tsv")
        (out / "table_wide.tsv").write_text(ex.format_wide(cells), encoding="utf-8")
        _write_table(ex.aggregate(dicts, field_name="line_delta"), out / "table_line.tsv")
        ols = [_ols_report(dicts, mid, cfg.min_category_count) for mid in scorers]
        _dump_json(ols, out / "regression.json")

        stage = "survey"
        pairs = sv.select_pairs(dicts, cfg.per_cell)
        ex.write_jsonl(pairs, out / "pairs.jsonl")
        forms_dir = out / "forms"
        forms_dir.mkdir(exist_ok=True)
        if pairs:
            forms, key = sv.emit_survey(pairs, min(cfg.per_respondent, len(pairs)), cfg.seed, cfg.n_forms)
            for form in forms:
                (forms_dir / f"{form['form_id']}.txt").write_text(sv.render_form(form), encoding="utf-8")
                _dump_json(form, forms_dir / f"{form['form_id']}.json")
            _dump_json(key, out / "answer_key.json")
    except BaseException as exc:
        marker.write_text(f"{stage}\n{type(exc).__name__}: {exc}\n", encoding="utf-8")
        exc.stage = stage  # type: ignore[attr-defined]
        raise
    return out


# -- subcommand handlers --------------------------------------------------------------------

def cmd_frontend_dump(a) -> int:
    source = Path(a.file).read_text(encoding="utf-8")
    text = dump_parsed(parse_file(source, a.file), a.trivia)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_corpus_ingest(a) -> int:
    m = cp.ingest(a.root)
    if not a.no_dedup:
        m = cp.dedup(m)
    cp.write_manifest(m, a.out)
    print(f"{len(m.entries)} files, {m.removed_duplicates} duplicates removed, {m.skipped} skipped")
    return EXIT_OK


def cmd_corpus_split(a) -> int:
    m = cp.split_by_project(cp.read_manifest(a.manifest), a.ratio, a.seed)
    cp.write_manifest(m, a.out or a.manifest)
    print(f"train {len(m.by_split(cp.TRAIN))} files, test {len(m.by_split(cp.TEST))} files")
    return EXIT_OK


def cmd_lm_train(a) -> int:
    m = cp.read_manifest(a.manifest)
    entries = m.by_split(a.split) if a.split != "all" else m.entries
    if not entries:
        raise DataError(f"no files in split {a.split!r}")
    model = lm.train((cp.read_source(e) for e in entries), a.order, a.lambda_jm, a.abstracted, a.keep_zero)
    lm.save(model, a.out)
    print(f"trained order-{model.order} model on {model.n_tokens()} tokens, vocab {len(model.vocab)}")
    return EXIT_OK


def cmd_lm_score(a) -> int:
    model = _load_model(a.model)
    src = Path(a.file).read_text(encoding="utf-8", errors="replace")
    stream = model.stream_source(src)
    if a.lambda_cache is None:
        s = model.score_stream(stream)
    else:
        s = lm.score_with_cache(model, stream, a.lambda_cache)
    if a.per_token:
        for t, v in zip(stream, s):
            print(f"{v:.6f}\t{t}")
    mean = sum(s) / len(s) if s else float("nan")
    print(f"tokens={len(s)}\tcross_entropy={mean:.6f}")
    return EXIT_OK


def cmd_transform_run(a) -> int:
    m = cp.read_manifest(a.manifest)
    entries = m.by_split(a.split) if a.split != "all" else m.entries
    sources = {e.path: cp.read_source(e) for e in entries}
    counts = cp.line_counts(sources.values())
    kinds = _split_list(a.kind) or list(tf.ALL_KINDS)
    bad = [k for k in kinds if k not in tf.ALL_KINDS]
    if bad:
        raise ConfigError(f"unknown kinds {bad}")
    keys = _seed_keys(entries)
    records = []
    for path in sorted(sources):
        src = sources[path]
        try:
            parsed = parse_file(src, path)
        except (LexError, ParseError) as exc:
            log.warning("skipping %s: %s", path, exc)
            continue
        excluded = cp.filter_test_lines(src, counts, a.dup_threshold)
        records.extend(tf.generate(parsed, kinds, a.seed, excluded, keys[path]))
    ex.write_jsonl(records, a.out)
    print(f"{len(records)} transformation records")
    return EXIT_OK


def cmd_experiment_run(a) -> int:
    cfg = RunConfig(
        roots=["-"],
        seed=a.seed,
        order=a.order,
        lambda_jm=a.lambda_jm,
        lambda_cache=a.lambda_cache,
        dup_threshold=a.dup_threshold,
        kinds=_split_list(a.kinds) or list(tf.ALL_KINDS),
        models=_split_list(a.models) or list(ex.MODEL_IDS),
    )
    cfg.validate()
    models: Dict[str, lm.NgramModel] = {}
    if a.plain_model:
        models["plain"] = _load_model(a.plain_model)
    if a.abstracted_model:
        models["abstracted"] = _load_model(a.abstracted_model)
    need_abs = any(m.endswith("_abs") for m in cfg.models) and "abstracted" not in models
    need_plain = any(not m.endswith("_abs") for m in cfg.models) and "plain" not in models
    if need_abs or need_plain:
        if not a.train_manifest:
            raise ConfigError("give --train-manifest or model files for every requested model")
        models.update(_train_models(cp.read_manifest(a.train_manifest), cfg, need_abs, need_plain))
    test_m = cp.read_manifest(a.test_manifest)
    entries = test_m.by_split(cp.TEST)
    if not entries:
        # an unsplit manifest is all test data; a split one with no test files is a mistake
        if any(e.split != cp.UNSPLIT for e in test_m.entries) or not test_m.entries:
            raise DataError(f"{a.test_manifest} has no test files")
        entries = test_m.entries
    test = [e.path for e in entries]
    deltas, _ = ex.run_experiment(test, _scorers(models, cfg.models, cfg.lambda_cache), cfg.kinds, cfg.seed,
                                  cfg.dup_threshold, keys=_seed_keys(entries))
    ex.write_jsonl(deltas, a.out)
    print(f"{len(deltas)} delta records")
    return EXIT_OK


def cmd_experiment_aggregate(a) -> int:
    cells = ex.aggregate(ex.read_jsonl(a.inp), a.level, a.field)
    text = ex.format_wide(cells) if a.wide else ex.format_table(cells)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_stats_wilcoxon(a) -> int:
    recs = ex.read_jsonl(a.inp)
    keys = _split_list(a.group) or ["kind", "model"]
    alias = {"model": "model_id"}
    groups: Dict[tuple, List[float]] = {}
    for r in recs:
        groups.setdefault(tuple(str(r[alias.get(k, k)]) for k in keys), []).append(float(r[a.field]))
    m = a.family_size or len(groups)
    lines = ["\t".join(keys + ["n", "n_nonzero", "W", "p_value", "estimate", "ci_low", "ci_high", "ci_level", "method"])]
    for key in sorted(groups):
        w = stats.wilcoxon_signed_rank(groups[key], a.level, m)
        lines.append(
            "\t".join(list(key) + [str(w.n), str(w.n_nonzero), f"{w.statistic:g}", f"{w.p_two_sided:.6g}", f"{w.estimate:.6g}", f"{w.ci_low:.6g}", f"{w.ci_high:.6g}", f"{w.ci_level:.6g}", w.method])
        )
    text = "\n".join(lines) + "\n"
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_stats_ols(a) -> int:
    report = _ols_report(ex.read_jsonl(a.inp), a.model, a.min_count)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if "error" not in report else EXIT_DATA


def cmd_survey_select(a) -> int:
    pairs = sv.select_pairs(ex.read_jsonl(a.inp), a.per_cell, a.model)
    ex.write_jsonl(pairs, a.out)
    print(f"{len(pairs)} pairs")
    return EXIT_OK


def _read_pairs(path) -> List[sv.SurveyPair]:
    return [sv.SurveyPair.from_dict(d) for d in ex.read_jsonl(path)]


def cmd_survey_emit(a) -> int:
    forms, key = sv.emit_survey(_read_pairs(a.pairs), a.per_respondent, a.seed, a.n_forms)
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for form in forms:
        (out / f"{form['form_id']}.txt").write_text(sv.render_form(form), encoding="utf-8")
        _dump_json(form, out / f"{form['form_id']}.json")
    _dump_json(key, out / "answer_key.json")
    print(f"{len(forms)} forms written to {out}")
    return EXIT_OK


def cmd_survey_analyze(a) -> int:
    pairs = _read_pairs(a.pairs)
    responses = sv.read_responses(a.responses)
    report = sv.analyze_responses(responses, pairs)
    _dump_json(report, a.out)
    if a.long_out:
        ex.write_jsonl(sv.long_format(responses, pairs), a.long_out)
    print(f"agreement={report['agreement']} majority={report['majority_agreement']}")
    return EXIT_OK


def cmd_pipeline(a) -> int:
    overrides = {"roots": a.root or None, "out_dir": a.out_dir, "seed": a.seed}
    cfg = load_config(a.config, overrides)
    t0 = time.time()
    out = run_pipeline(cfg)
    print(f"pipeline finished in {time.time() - t0:.1f}s; outputs in {out}")
    return EXIT_OK


def cmd_demo_corpus(a) -> int:
    paths = synth.write_corpus(a.out, a.projects, a.files_per_project, a.seed)
    print(f"wrote {len(paths)} files under {a.out}")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="natpref", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")
    sub = p.add_subparsers(dest="group", required=True)

    g = sub.add_parser("corpus", help="manifests, dedup and project split").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("ingest", help="scan project roots into a manifest")
    c.add_argument("--root", action="append", required=True, help="project directory (repeatable)")
    c.add_argument("--out", required=True, help="manifest path (JSON lines)")
    c.add_argument("--no-dedup", action="store_true", help="keep files sharing parentDir/fileName")
    c.set_defaults(fn=cmd_corpus_ingest)
    c = g.add_parser("split", help="label projects train/test")
    c.add_argument("--manifest", required=True, help="corpus manifest (JSON lines)")
    c.add_argument("--ratio", type=float, default=0.7, help="fraction of projects for training")
    c.add_argument("--seed", type=int, default=0, help="master seed for every random choice")
    c.add_argument("--out", help="output manifest (default: overwrite input)")
    c.set_defaults(fn=cmd_corpus_split)

    g = sub.add_parser("frontend", help="inspect the Java frontend").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("dump", help="print tokens and expression trees of one file")
    c.add_argument("--file", required=True, help="Java source file")
    c.add_argument("--trivia", action="store_true", help="also list whitespace and comment tokens")
    c.add_argument("--out", help="output path (default: stdout)")
    c.set_defaults(fn=cmd_frontend_dump)

    g = sub.add_parser("lm", help="train and score n-gram models").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("train", help="train a model on one manifest split")
    c.add_argument("--manifest", required=True, help="corpus manifest (JSON lines)")
    c.add_argument("--split", default=cp.TRAIN, choices=[cp.TRAIN, cp.TEST, "all"], help="which manifest split to use")
    c.add_argument("--order", type=int, default=6, help="n-gram order")
    c.add_argument("--lambda-jm", type=float, default=0.5, help="interpolation weight")
    c.add_argument("--abstracted", action="store_true", help="model abstracted token streams")
    c.add_argument("--keep-zero", action="store_true", help="keep literal 0 when abstracting")
    c.add_argument("--out", required=True, help="model file")
    c.set_defaults(fn=cmd_lm_train)
    c = g.add_parser("score", help="surprisal of one file")
    c.add_argument("--model", required=True, help="model file")
    c.add_argument("--file", required=True, help="Java source file to score")
    c.add_argument("--lambda-cache", type=float, help="blend with a file cache at this weight")
    c.add_argument("--per-token", action="store_true", help="print every token's surprisal")
    c.set_defaults(fn=cmd_lm_score)

    g = sub.add_parser("transform", help="generate transformation records").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("run", help="write transformation records for one split")
    c.add_argument("--manifest", required=True, help="corpus manifest (JSON lines)")
    c.add_argument("--split", default=cp.TEST, choices=[cp.TRAIN, cp.TEST, "all"], help="which manifest split to use")
    c.add_argument("--kind", help="comma separated kinds (default: all): " + ", ".join(tf.ALL_KINDS))
    c.add_argument("--seed", type=int, default=0, help="master seed for every random choice")
    c.add_argument("--dup-threshold", type=float, default=cp.DEFAULT_DUP_THRESHOLD, help="drop test lines seen more often than this")
    c.add_argument("--out", required=True, help="output path")
    c.set_defaults(fn=cmd_transform_run)

    g = sub.add_parser("experiment", help="score variants and aggregate").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("run", help="score original and transformed code")
    c.add_argument("--train-manifest", help="used to train any model not given as a file")
    c.add_argument("--test-manifest", required=True, help="manifest whose test split is transformed and scored")
    c.add_argument("--plain-model", help="model file for global/cache")
    c.add_argument("--abstracted-model", help="model file for global_abs/cache_abs")
    c.add_argument("--models", help="comma separated model ids: " + ", ".join(ex.MODEL_IDS))
    c.add_argument("--kinds", help="comma separated kinds")
    c.add_argument("--seed", type=int, default=0, help="master seed for every random choice")
    c.add_argument("--order", type=int, default=6, help="n-gram order")
    c.add_argument("--lambda-jm", type=float, default=0.5, help="Jelinek-Mercer interpolation weight")
    c.add_argument("--lambda-cache", type=float, default=0.5, help="weight of the file cache in the blend")
    c.add_argument("--dup-threshold", type=float, default=cp.DEFAULT_DUP_THRESHOLD, help="drop test lines seen more often than this")
    c.add_argument("--out", required=True, help="output path")
    c.set_defaults(fn=cmd_experiment_run)
    c = g.add_parser("aggregate", help="per kind and model summary table")
    c.add_argument("--in", dest="inp", required=True, help="delta records (JSON lines)")
    c.add_argument("--out", help="output path")
    c.add_argument("--level", type=float, default=0.95, help="confidence level before Bonferroni widening")
    c.add_argument("--field", default="delta", choices=["delta", "line_delta"], help="which delta to summarize")
    c.add_argument("--wide", action="store_true", help="kinds as rows and models as columns")
    c.set_defaults(fn=cmd_experiment_aggregate)

    g = sub.add_parser("stats", help="signed-rank tests and regression").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("wilcoxon", help="signed-rank test per group")
    c.add_argument("--in", dest="inp", required=True, help="delta records (JSON lines)")
    c.add_argument("--group", default="kind,model", help="comma separated grouping fields")
    c.add_argument("--family-size", type=int, help="Bonferroni family size (default: number of groups)")
    c.add_argument("--level", type=float, default=0.95, help="confidence level before Bonferroni widening")
    c.add_argument("--field", default="delta", choices=["delta", "line_delta"], help="which delta to summarize")
    c.add_argument("--out", help="output path")
    c.set_defaults(fn=cmd_stats_wilcoxon)
    c = g.add_parser("ols", help="regression of delta on covariates")
    c.add_argument("--in", dest="inp", required=True, help="delta records (JSON lines)")
    c.add_argument("--model", default="global", help="model id whose deltas are used: " + ", ".join(ex.MODEL_IDS))
    c.add_argument("--min-count", type=int, default=100, help="drop categories rarer than this")
    c.add_argument("--out", help="output path")
    c.set_defaults(fn=cmd_stats_ols)

    g = sub.add_parser("survey", help="survey pairs, forms and analysis").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("select", help="pick pairs with the largest line deltas")
    c.add_argument("--in", dest="inp", required=True, help="delta records (JSON lines)")
    c.add_argument("--out", required=True, help="output path")
    c.add_argument("--per-cell", type=int, default=20, help="pairs per kind and direction")
    c.add_argument("--model", default="global", help="model id whose deltas are used: " + ", ".join(ex.MODEL_IDS))
    c.set_defaults(fn=cmd_survey_select)
    c = g.add_parser("emit", help="write seeded respondent forms and answer key")
    c.add_argument("--pairs", required=True, help="survey pairs (JSON lines)")
    c.add_argument("--n-forms", type=int, default=1, help="number of respondent forms")
    c.add_argument("--per-respondent", type=int, default=80, help="pairs per form, attention item excluded")
    c.add_argument("--seed", type=int, default=0, help="master seed for every random choice")
    c.add_argument("--out-dir", required=True, help="output directory")
    c.set_defaults(fn=cmd_survey_emit)
    c = g.add_parser("analyze", help="agreement between respondents and the model")
    c.add_argument("--pairs", required=True, help="survey pairs (JSON lines)")
    c.add_argument("--responses", required=True, help="response file (JSON lines or respondent,pair_id,choice rows)")
    c.add_argument("--out", required=True, help="output path")
    c.add_argument("--long-out", help="long-format rows for external model fitting")
    c.set_defaults(fn=cmd_survey_analyze)

    c = sub.add_parser("pipeline", help="run every stage end to end")
    c.add_argument("--config", help="JSON config; its values override flags")
    c.add_argument("--root", action="append", help="project directory (repeatable)")
    c.add_argument("--out-dir", help="output directory")
    c.add_argument("--seed", type=int, help="master seed for every random choice")
    c.set_defaults(fn=cmd_pipeline)

    c = sub.add_parser("demo-corpus", help="write a small synthetic Java corpus")
    c.add_argument("--out", required=True, help="output path")
    c.add_argument("--projects", type=int, default=4, help="number of synthetic projects")
    c.add_argument("--files-per-project", type=int, default=5, help="files written per project")
    c.add_argument("--seed", type=int, default=0, help="master seed for every random choice")
    c.set_defaults(fn=cmd_demo_corpus)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DataError, FileNotFoundError, LexError, ParseError, lm.ModelFormatError, json.JSONDecodeError) as exc:
        stage = getattr(exc, "stage", None)
        print(f"data error{f' in stage {stage}' if stage else ''}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        stage = getattr(exc, "stage", None)
        print(f"data error{f' in stage {stage}' if stage else ''}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001 - last-resort classification
        stage = getattr(exc, "stage", None)
        print(f"internal error{f' in stage {stage}' if stage else ''}: {exc}", file=sys.stderr)
        if args.verbose:
            traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
