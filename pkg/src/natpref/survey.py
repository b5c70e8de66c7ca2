"""Forced-choice survey pairs from line-level deltas, and response analysis.

Pairs are stored canonically: ``text_a`` is always the original line and
``text_b`` the transformed one. Forms shuffle what is displayed on the left,
but responses are recorded against the canonical labels, with an answer key
mapping display slots back to them.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import transforms as tf
from .frontend.lexer import LexError, tokenize
from .lm import abstract_stream
from .seeding import rng_for

log = logging.getLogger(__name__)

SURVEY_KINDS = (tf.REL_SWAP, tf.ARITH_SWAP, tf.PAREN_ADD, tf.PAREN_REMOVE)
FILTER_KEYWORDS = ("hash", "<<", ">>", ">>>")
MAX_LINE_CHARS = 80
ATTENTION_ID = "ATTN"
ATTENTION_A = "for(int i = 0; i < length; i++) {"
ATTENTION_B = "for(int i = 0; length > i; i++) {"


@dataclass
class SurveyPair:
    id: str
    kind: str
    text_a: str
    text_b: str
    original_is: str
    lm_prefers: str
    line_delta: float
    file: Optional[str] = None
    span: Tuple[int, int] = (0, 0)
    meta: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["span"] = list(self.span)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "SurveyPair":
        d = dict(d)
        d["span"] = tuple(d.get("span", (0, 0)))
        return cls(**d)

    @property
    def lm_prefers_label(self) -> str:
        """Canonical label (a or b) of the side the model finds more probable."""
        if self.lm_prefers == "original":
            return self.original_is
        return "b" if self.original_is == "a" else "a"


def attention_pair() -> SurveyPair:
    return SurveyPair(ATTENTION_ID, "attention", ATTENTION_A, ATTENTION_B, "a", "original", 0.0)


# -- selection -------------------------------------------------------------------

def _as_dict(r) -> dict:
    return r.to_dict() if hasattr(r, "to_dict") else dict(r)


def pair_is_presentable(original: str, transformed: str) -> bool:
    if original == transformed:
        return False
    for text in (original, transformed):
        if "\n" in text or len(text) > MAX_LINE_CHARS:
            return False
        if any(k in text for k in FILTER_KEYWORDS):
            return False
    return True


def similarity_key(line: str) -> Tuple[str, ...]:
    """Abstracted token sequence; pairs sharing it count as near-duplicates."""
    try:
        return tuple(abstract_stream(tokenize(line)))
    except LexError:
        return (line,)


def select_pairs(
    delta_records: Iterable,
    per_cell: int = 20,
    model_id: str = "global",
    kinds: Sequence[str] = SURVEY_KINDS,
) -> List[SurveyPair]:
    """Top ``per_cell`` lowest and highest line deltas per kind.

    Ties are broken by file path and span so the result does not depend on
    input order. A candidate whose original line has the same abstracted
    token sequence as one already chosen for the kind is skipped, and the
    next-ranked candidate (down to rank ``2 * per_cell``) takes its place.
    """
    by_kind: Dict[str, List[dict]] = {k: [] for k in kinds}
    for r in delta_records:
        d = _as_dict(r)
        if d["kind"] not in by_kind or d["model_id"] != model_id:
            continue
        if d.get("meta", {}).get("symmetry_broken"):
            continue
        if not pair_is_presentable(d["original_line"], d["transformed_line"]):
            continue
        by_kind[d["kind"]].append(d)
    pairs: List[SurveyPair] = []
    for kind in kinds:
        cands = by_kind[kind]
        tiebreak = lambda d: (d.get("file") or "", tuple(d["span"]), d["transformed_line"])
        ascending = sorted(cands, key=lambda d: (d["line_delta"], tiebreak(d)))
        descending = sorted(cands, key=lambda d: (-d["line_delta"], tiebreak(d)))
        seen_keys = set()
        used = set()
        for label, ranked in (("dec", ascending), ("inc", descending)):
            chosen = 0
            for d in ranked[: 2 * per_cell]:
                if chosen == per_cell:
                    break
                ident = (d.get("file"), tuple(d["span"]), d["transformed_line"])
                key = similarity_key(d["original_line"])
                if ident in used or key in seen_keys:
                    continue
                used.add(ident)
                seen_keys.add(key)
                chosen += 1
                pairs.append(
                    SurveyPair(
                        f"{kind}-{label}-{chosen:02d}",
                        kind,
                        d["original_line"],
                        d["transformed_line"],
                        "a",
                        # delta = original - transformed; <= 0 favours the original
                        "original" if d["line_delta"] <= 0 else "transformed",
                        float(d["line_delta"]),
                        d.get("file"),
                        tuple(d["span"]),
                        {"symmetry_broken": bool(d.get("meta", {}).get("symmetry_broken", False))},
                    )
                )
            if chosen < per_cell:
                log.warning("only %d of %d %s pairs for %s", chosen, per_cell, label, kind)
    return pairs


# -- forms ---------------------------------------------------------------------------

def emit_survey(pairs: Sequence[SurveyPair], per_respondent: int = 80, seed: int = 0, n_forms: int = 1) -> Tuple[List[dict], dict]:
    """Seeded forms plus an answer key.

    Each form holds ``per_respondent`` distinct pairs in random order, each
    with a random left/right assignment, and the attention item at a random
    position. The key maps every (form, question) to the canonical labels
    shown left and right.
    """
    if per_respondent > len(pairs):
        raise ValueError(f"per_respondent={per_respondent} exceeds the {len(pairs)} available pairs")
    ids = [p.id for p in pairs]
    if len(set(ids)) != len(ids) or ATTENTION_ID in ids:
        raise ValueError("pair ids must be unique and must not use the attention id")
    forms: List[dict] = []
    key: Dict[str, List[dict]] = {}
    attn = attention_pair()
    for f in range(n_forms):
        rng = rng_for(seed, "form", f)
        chosen = rng.sample(list(pairs), per_respondent)
        rng.shuffle(chosen)
        chosen.insert(rng.randrange(per_respondent + 1), attn)
        form_id = f"form-{f:03d}"
        questions, answers = [], []
        for q, p in enumerate(chosen, start=1):
            flip = rng.random() < 0.5
            left, right = ("b", "a") if flip else ("a", "b")
            text = {"a": p.text_a, "b": p.text_b}
            questions.append({"question": q, "pair_id": p.id, "left": text[left], "right": text[right]})
            answers.append({"question": q, "pair_id": p.id, "left": left, "right": right})
        forms.append({"form_id": form_id, "questions": questions})
        key[form_id] = answers
    return forms, key


def render_form(form: dict) -> str:
    """Plain-text rendering of one form."""
    lines = [f"# {form['form_id']}", ""]
    for q in form["questions"]:
        lines.append(f"Q{q['question']} [{q['pair_id']}] Which line do you prefer?")
        lines.append(f"  (1) {q['left']}")
        lines.append(f"  (2) {q['right']}")
        lines.append("")
    return "\n".join(lines)


# -- analysis ---------------------------------------------------------------------------

@dataclass
class ResponseRecord:
    respondent: str
    pair_id: str
    choice: str
    passed_attention: bool = False


def _rate(flags: Sequence[float]) -> Optional[float]:
    return sum(flags) / len(flags) if flags else None


def analyze_responses(responses: Iterable[Mapping], pairs: Sequence[SurveyPair]) -> dict:
    """Agreement between respondents and the model's preferred side.

    A response agrees when its canonical choice is the side with lower line
    surprisal. Per-question majority agreement scores a tie as 0.5.
    Respondents pass the attention check by choosing the familiar loop
    header; a respondent without an attention answer does not pass.
    """
    by_id = {p.id: p for p in pairs}
    rejected = []
    rows: List[ResponseRecord] = []
    attention: Dict[str, bool] = {}
    for n, r in enumerate(responses):
        rid, pid, choice = str(r["respondent"]), str(r["pair_id"]), str(r["choice"]).lower()
        if choice not in ("a", "b"):
            rejected.append({"row": n, "reason": f"bad choice {choice!r}"})
            continue
        if pid == ATTENTION_ID:
            attention[rid] = choice == "a"
            continue
        if pid not in by_id:
            rejected.append({"row": n, "reason": f"unknown pair id {pid!r}"})
            continue
        rows.append(ResponseRecord(rid, pid, choice))
    for row in rows:
        row.passed_attention = attention.get(row.respondent, False)

    agree = [(row, 1.0 if row.choice == by_id[row.pair_id].lm_prefers_label else 0.0) for row in rows]
    per_question: Dict[str, List[float]] = {}
    for row, a in agree:
        per_question.setdefault(row.pair_id, []).append(a)
    majority = {}
    for pid, vals in per_question.items():
        frac = sum(vals) / len(vals)
        majority[pid] = 1.0 if frac > 0.5 else 0.5 if frac == 0.5 else 0.0

    kinds = sorted({by_id[pid].kind for pid in per_question})
    report = {
        "n_responses": len(rows),
        "n_respondents": len({row.respondent for row in rows}),
        "n_rejected": len(rejected),
        "rejected": rejected,
        "agreement": _rate([a for _, a in agree]),
        "majority_agreement": _rate(list(majority.values())),
        "per_kind": {
            k: {
                "agreement": _rate([a for row, a in agree if by_id[row.pair_id].kind == k]),
                "majority_agreement": _rate([v for pid, v in majority.items() if by_id[pid].kind == k]),
                "n_questions": sum(1 for pid in majority if by_id[pid].kind == k),
            }
            for k in kinds
        },
        "attention": {
            "passed": _rate([a for row, a in agree if row.passed_attention]),
            "failed": _rate([a for row, a in agree if not row.passed_attention]),
            "n_passed_respondents": sum(1 for v in attention.values() if v),
        },
    }
    return report


def long_format(responses: Iterable[Mapping], pairs: Sequence[SurveyPair]) -> List[dict]:
    """One row per valid response for external mixed-effects fitting.

    ``outcome`` is 1 when the respondent chose the original line and
    ``lm_out`` is 1 when the model prefers the original.
    """
    by_id = {p.id: p for p in pairs}
    out = []
    for r in responses:
        pid = str(r["pair_id"])
        if pid not in by_id:
            continue
        p = by_id[pid]
        out.append(
            {
                "outcome": int(str(r["choice"]).lower() == p.original_is),
                "lm_out": int(p.lm_prefers == "original"),
                "kind": p.kind,
                "respondent": str(r["respondent"]),
                "question": pid,
            }
        )
    return out


def read_responses(path) -> List[dict]:
    """Responses as JSON lines or tab/comma separated respondent, pair_id, choice."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("{"):
                out.append(json.loads(line))
                continue
            parts = [p.strip() for p in line.replace("\t", ",").split(",")]
            if parts[:3] == ["respondent", "pair_id", "choice"]:
                continue
            if len(parts) != 3:
                raise ValueError(f"malformed response line: {line!r}")
            out.append({"respondent": parts[0], "pair_id": parts[1], "choice": parts[2]})
    return out
