"""Score original and transformed code over their shared tokens.

For each transformation record and each model variant, the mean surprisal
of the tokens the two variants share is computed over the edited region
(``delta``) and over the full lines containing it (``line_delta``).
Positive deltas mean the transformed code is more probable.
"""

from __future__ import annotations

import bisect
import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import transforms as tf
from .corpus import DEFAULT_DUP_THRESHOLD, filter_test_lines, line_counts
from .frontend.lexer import LexError, Token, tokenize
from .frontend.expr import ParseError
from .frontend.structure import parse_file
from .lm import CacheState, NgramModel, blend_prob, surprisal_bits
from .stats import wilcoxon_signed_rank

log = logging.getLogger(__name__)

MODEL_IDS = ("global", "cache", "global_abs", "cache_abs")


@dataclass(frozen=True)
class Scorer:
    """A model plus the cache weight it is used with (None for no cache)."""

    model: NgramModel
    lambda_cache: Optional[float] = None


@dataclass
class DeltaRecord:
    kind: str
    model_id: str
    file: Optional[str]
    span: Tuple[int, int]
    mean_surprisal_original: float
    mean_surprisal_transformed: float
    delta: float
    line_surprisal_original: float
    line_surprisal_transformed: float
    line_delta: float
    n_shared: int
    n_line_shared: int
    original_line: str
    transformed_line: str
    covariates: Dict[str, object] = field(default_factory=dict)
    meta: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["span"] = list(self.span)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "DeltaRecord":
        d = dict(d)
        d["span"] = tuple(d["span"])
        return cls(**d)


# -- token bookkeeping ------------------------------------------------------------

@dataclass
class _Variant:
    source: str
    sig: List[Token]
    starts: List[int]  # char offset of each significant token

    @classmethod
    def of(cls, source: str) -> "_Variant":
        toks = tokenize(source)
        sig, starts = [], []
        pos = 0
        for t in toks:
            if not t.is_trivia:
                sig.append(t)
                starts.append(pos)
            pos += len(t.text)
        return cls(source, sig, starts)

    def in_chars(self, s: int, e: int) -> range:
        return range(bisect.bisect_left(self.starts, s), bisect.bisect_left(self.starts, e))


def _match_shared(texts: Sequence[str], positions: Iterable[int], shared: Counter) -> List[int]:
    """Positions whose token text is still available in ``shared``, left to right."""
    left = Counter(shared)
    out = []
    for i in positions:
        t = texts[i]
        if left[t] > 0:
            left[t] -= 1
            out.append(i)
    return out


def _windows(rec: tf.TransformRecord, var: _Variant, transformed: bool) -> Tuple[List[int], List[int]]:
    """Candidate positions (before shared matching) for both granularities."""
    s = rec.span[0]
    e = s + len(rec.transformed_text if transformed else rec.original_text)
    in_span = var.in_chars(s, e)
    if rec.kind in tf.SHUFFLE_KINDS:
        lines = set(rec.meta.get("affected_lines", ()))
        sel = [i for i in in_span if var.sig[i].line in lines]
        return sel, sel
    expr = list(in_span)
    if not expr:
        return [], []
    first_line = var.sig[expr[0]].line
    last_line = var.sig[expr[-1]].end_line
    lines = [t.line for t in var.sig]
    lo = bisect.bisect_left(lines, first_line)
    hi = bisect.bisect_right(lines, last_line)
    return expr, list(range(lo, hi))


def _line_text(source: str, s: int, e: int) -> str:
    a = source.rfind("\n", 0, s) + 1
    b = source.find("\n", e)
    return source[a : (len(source) if b < 0 else b)].strip()


# -- scoring ----------------------------------------------------------------------

def _score_positions(scorer: Scorer, stream: Sequence[str], positions: Sequence[int], cache: Optional[CacheState]) -> Dict[int, float]:
    """Surprisal at ``positions``; ``cache`` must hold stream[:positions[0]]."""
    if not positions:
        return {}
    model = scorer.model
    if scorer.lambda_cache is None:
        h = model.order - 1
        return {i: model.surprisal(stream[max(0, i - h):i], stream[i]) for i in positions}
    start, stop = positions[0], positions[-1] + 1
    wanted = set(positions)
    out = {}
    for i in range(start, stop):
        if i in wanted:
            out[i] = surprisal_bits(blend_prob(model, cache, stream[i], scorer.lambda_cache))
        cache.add(stream[i])
    cache.undo(stop - start)
    return out


def _mean(vals: Iterable[float]) -> float:
    vals = list(vals)
    return sum(vals) / len(vals) if vals else float("nan")


def shared_token_surprisal(
    variant_source: str,
    edited_span: Tuple[int, int],
    shared_tokens: Counter,
    scorer: Scorer,
) -> float:
    """Mean surprisal of shared-token occurrences inside ``edited_span``.

    Every token is scored in its true in-file context; for cache scorers the
    cache holds the file prefix before the first scored token.
    """
    var = _Variant.of(variant_source)
    stream = scorer.model.stream_source(variant_source)
    texts = [t.text for t in var.sig]
    pos = _match_shared(texts, var.in_chars(*edited_span), shared_tokens)
    if not pos:
        raise ValueError("no shared tokens inside the edited span")
    cache = None
    if scorer.lambda_cache is not None:
        cache = CacheState(scorer.model.order)
        for t in stream[: pos[0]]:
            cache.add(t)
    return _mean(_score_positions(scorer, stream, pos, cache).values())


def score_file_records(
    source: str,
    records: Sequence[tf.TransformRecord],
    scorers: Mapping[str, Scorer],
    operator_counts: Optional[Mapping[str, int]] = None,
) -> List[DeltaRecord]:
    """DeltaRecords for every (record, scorer) pair of one test file.

    Shuffle records are not scored by abstracted models, whose streams are
    identical on both sides of a rename.
    """
    orig = _Variant.of(source)
    orig_texts = [t.text for t in orig.sig]
    prepared = []
    for rec in records:
        new_source = rec.apply(source)
        var = _Variant.of(new_source)
        var_texts = [t.text for t in var.sig]
        oe, ol = _windows(rec, orig, False)
        te, tl = _windows(rec, var, True)
        if rec.kind in tf.SHUFFLE_KINDS:
            # same token positions on both sides; names differ by the renaming
            sel = {"oe": oe, "te": te, "ol": ol, "tl": tl}
        else:
            line_shared = Counter(orig_texts[i] for i in ol) & Counter(var_texts[i] for i in tl)
            sel = {
                "oe": _match_shared(orig_texts, oe, rec.shared_tokens),
                "te": _match_shared(var_texts, te, rec.shared_tokens),
                "ol": _match_shared(orig_texts, ol, line_shared),
                "tl": _match_shared(var_texts, tl, line_shared),
            }
        if not sel["oe"] or not sel["te"]:
            log.info("%s: %s record at %s has no shared tokens; dropped", rec.file, rec.kind, rec.span)
            continue
        start = min(sel["oe"][0], sel["te"][0], *(sel["ol"][:1] + sel["tl"][:1]))
        prepared.append((rec, new_source, var, sel, start))

    out: List[DeltaRecord] = []
    for model_id, scorer in scorers.items():
        model = scorer.model
        orig_stream = model.stream(orig.sig)
        results: Dict[int, Tuple[Dict[int, float], Dict[int, float]]] = {}
        # renames are invisible once identifiers are abstracted
        active = [k for k, p in enumerate(prepared) if not (model.abstracted and p[0].kind in tf.SHUFFLE_KINDS)]
        # walk records by window start so one cache serves the shared prefix
        order = sorted(active, key=lambda k: prepared[k][4])
        cache = CacheState(model.order) if scorer.lambda_cache is not None else None
        filled = 0
        for k in order:
            rec, new_source, var, sel, start = prepared[k]
            var_stream = model.stream(var.sig)
            o_pos = sorted(set(sel["oe"]) | set(sel["ol"]))
            t_pos = sorted(set(sel["te"]) | set(sel["tl"]))
            if cache is not None:
                while filled < start:
                    cache.add(orig_stream[filled])
                    filled += 1
                o_pos = _pad(o_pos, start)
                t_pos = _pad(t_pos, start)
            so = _score_positions(scorer, orig_stream, o_pos, cache)
            st = _score_positions(scorer, var_stream, t_pos, cache)
            results[k] = (so, st)
        for k in active:
            rec, new_source, var, sel, _ = prepared[k]
            so, st = results[k]
            mo = _mean(so[i] for i in sel["oe"])
            mt = _mean(st[i] for i in sel["te"])
            lo = _mean(so[i] for i in sel["ol"])
            lt = _mean(st[i] for i in sel["tl"])
            cov = dict(rec.covariates)
            cov["original_surprisal"] = mo
            cov["log_num_tokens"] = math.log(max(int(cov.get("num_tokens", 1)), 1))
            cov["dominant_operator"] = dominant_operator(rec, operator_counts)
            s = rec.span[0]
            out.append(
                DeltaRecord(
                    rec.kind,
                    model_id,
                    rec.file,
                    rec.span,
                    mo,
                    mt,
                    mo - mt,
                    lo,
                    lt,
                    lo - lt,
                    len(sel["oe"]),
                    len(sel["ol"]),
                    _line_text(source, s, s + len(rec.original_text)),
                    _line_text(new_source, s, s + len(rec.transformed_text)),
                    cov,
                    dict(rec.meta),
                )
            )
    return out


def _pad(positions: List[int], start: int) -> List[int]:
    # the first scored position has to be the window start so the cache
    # walk begins there; the extra score is discarded by the caller
    return positions if positions[0] == start else [start] + positions


def dominant_operator(rec: tf.TransformRecord, operator_counts: Optional[Mapping[str, int]] = None) -> str:
    """The swapped operator for swaps; else the most frequent training operator."""
    if rec.kind in (tf.ARITH_SWAP, tf.REL_SWAP):
        return str(rec.meta.get("operator"))
    ops = list(rec.covariates.get("operators") or [])
    if not ops:
        return "none"
    counts = operator_counts or {}
    local = Counter(ops)
    return max(sorted(local), key=lambda o: (counts.get(o, 0), local[o]))


def operator_unigrams(model: NgramModel) -> Dict[str, int]:
    return {g[0]: c for g, c in model.counts[0].items()}


# -- corpus-level driver ------------------------------------------------------------

def run_experiment(
    test_paths: Sequence[str],
    scorers: Mapping[str, Scorer],
    kinds: Sequence[str] = tf.ALL_KINDS,
    seed: int = 0,
    dup_threshold: float = DEFAULT_DUP_THRESHOLD,
    read=None,
    keys: Optional[Mapping[str, str]] = None,
) -> Tuple[List[DeltaRecord], List[tf.TransformRecord]]:
    """Generate transforms on the filtered test files and score them.

    ``keys`` maps a path to the name used when deriving its random streams;
    paths without a key use themselves. Files that fail to lex or parse are
    logged and skipped.
    """
    keys = keys or {}
    read = read or (lambda p: open(p, encoding="utf-8", errors="replace").read())
    sources = {}
    for p in test_paths:
        try:
            sources[p] = read(p)
        except OSError as exc:
            log.warning("cannot read %s: %s", p, exc)
    counts = line_counts(sources.values())
    op_counts = None
    if "global" in scorers:
        op_counts = operator_unigrams(scorers["global"].model)
    deltas: List[DeltaRecord] = []
    transforms: List[tf.TransformRecord] = []
    for p in sorted(sources):
        src = sources[p]
        try:
            parsed = parse_file(src, p)
        except (LexError, ParseError, RecursionError) as exc:
            log.warning("skipping %s: %s", p, exc)
            continue
        excluded = filter_test_lines(src, counts, dup_threshold)
        recs = tf.generate(parsed, kinds, seed, excluded, keys.get(p))
        transforms.extend(recs)
        try:
            deltas.extend(score_file_records(src, recs, scorers, op_counts))
        except (LexError, ValueError) as exc:
            log.warning("scoring failed for %s: %s", p, exc)
    return deltas, transforms


# -- aggregation --------------------------------------------------------------------

@dataclass
class Cell:
    kind: str
    model_id: str
    n: int
    median: float
    mean: float
    p_value: float
    estimate: float
    ci_low: float
    ci_high: float
    ci_level: float

    def row(self) -> List[str]:
        def fmt(x):
            return "NA" if x is None or (isinstance(x, float) and math.isnan(x)) else f"{x:.6g}"

        return [self.kind, self.model_id, str(self.n)] + [
            fmt(v) for v in (self.median, self.mean, self.p_value, self.estimate, self.ci_low, self.ci_high, self.ci_level)
        ]


TABLE_HEADER = ["kind", "model", "n", "median_delta", "mean_delta", "p_value", "hl_estimate", "ci_low", "ci_high", "ci_level"]


def aggregate(records: Sequence, level: float = 0.95, field_name: str = "delta") -> List[Cell]:
    """Per (kind, model) summaries with Bonferroni-widened intervals.

    The family size is the number of cells. Cells with fewer than two
    records are reported with NA statistics.
    """
    groups: Dict[Tuple[str, str], List[float]] = {}
    for r in records:
        d = r.to_dict() if hasattr(r, "to_dict") else r
        groups.setdefault((d["kind"], d["model_id"]), []).append(float(d[field_name]))
    m = max(len(groups), 1)
    kind_rank = {k: i for i, k in enumerate(tf.ALL_KINDS)}
    model_rank = {k: i for i, k in enumerate(MODEL_IDS)}
    cells = []
    for key in sorted(groups, key=lambda k: (kind_rank.get(k[0], 99), k[0], model_rank.get(k[1], 99), k[1])):
        vals = groups[key]
        vals_sorted = sorted(vals)
        n = len(vals)
        median = (vals_sorted[(n - 1) // 2] + vals_sorted[n // 2]) / 2.0
        if n < 2:
            nan = float("nan")
            cells.append(Cell(key[0], key[1], n, nan, nan, nan, nan, nan, nan, nan))
            continue
        w = wilcoxon_signed_rank(vals, level, m)
        cells.append(Cell(key[0], key[1], n, median, sum(vals) / n, w.p_two_sided, w.estimate, w.ci_low, w.ci_high, w.ci_level))
    return cells


def format_table(cells: Sequence[Cell]) -> str:
    lines = ["\t".join(TABLE_HEADER)]
    lines.extend("\t".join(c.row()) for c in cells)
    return "\n".join(lines) + "\n"


def format_wide(cells: Sequence[Cell]) -> str:
    """Kinds as rows, models as columns, each entry the interval "low, high".

    A trailing ``°`` marks cells whose p-value exceeds 0.05; missing cells
    print ``--``.
    """
    models = [m for m in MODEL_IDS if any(c.model_id == m for c in cells)]
    models += sorted({c.model_id for c in cells} - set(models))
    kinds = []
    for c in cells:
        if c.kind not in kinds:
            kinds.append(c.kind)
    by_key = {(c.kind, c.model_id): c for c in cells}
    lines = ["\t".join(["kind"] + models)]
    for k in kinds:
        row = [k]
        for m in models:
            c = by_key.get((k, m))
            if c is None or c.n < 2 or math.isnan(c.ci_low):
                row.append("--")
                continue
            mark = "\u00b0" if c.p_value > 0.05 else ""
            row.append(f"{c.ci_low:.4f}, {c.ci_high:.4f}{mark}")
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def write_jsonl(items: Iterable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for it in items:
            d = it.to_dict() if hasattr(it, "to_dict") else it
            fh.write(json.dumps(d, sort_keys=True) + "\n")


def read_jsonl(path) -> List[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(l) for l in fh if l.strip()]
