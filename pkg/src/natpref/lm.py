"""Order-k n-gram models with Jelinek-Mercer interpolation and a file cache.

Token streams are lists of strings. Counts are kept for every order
``1..order`` and reset at file boundaries, so no n-gram spans two files.

The interpolation is::

    P_0(t)     = 1 / (|V| + 1)
    P_k(t | c) = lam * ML_k(t | c) + (1 - lam) * P_{k-1}(t | c[1:])

where the ``+1`` slot holds the mass of every token never seen in training.
If the order-k context was never observed, P_k = P_{k-1}; this keeps every
conditional distribution summing to one.
"""

from __future__ import annotations

import math
import re
import struct
import zlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

from .frontend.lexer import (
    FLOAT_LITERAL,
    IDENTIFIER,
    INT_LITERAL,
    STRING_LITERAL,
    Token,
    significant,
    tokenize,
)

MAGIC = b"NGLM"
VERSION = 1
_HEADER = struct.Struct("<4sHHdBI")

ID_TOKEN = "<id>"
INT_TOKEN = "<int>"
FLOAT_TOKEN = "<float>"
STR_TOKEN = "<str>"
KEPT_NUMBERS = frozenset({"1", "2", "3"})

# a string literal holding exactly one character, possibly escaped
_ONE_CHAR_STRING = re.compile(r'^"(?:[^"\\]|\\u+[0-9a-fA-F]{4}|\\[0-7]{1,3}|\\.)"$')


class ModelFormatError(ValueError):
    """Raised by :func:`load` on a corrupt, truncated or foreign file."""


def abstract_token(tok: Token, keep_zero: bool = False) -> str:
    cat = tok.category
    text = tok.text
    if cat == IDENTIFIER:
        return ID_TOKEN
    if cat == INT_LITERAL:
        if text in KEPT_NUMBERS or (keep_zero and text == "0"):
            return text
        return INT_TOKEN
    if cat == FLOAT_LITERAL:
        return FLOAT_TOKEN
    if cat == STRING_LITERAL:
        if text == '""' or _ONE_CHAR_STRING.match(text):
            return text
        return STR_TOKEN
    # char, boolean and null literals, keywords, operators, separators
    return text


def abstract_stream(tokens: Iterable[Token], keep_zero: bool = False) -> List[str]:
    """Replace identifiers and most literals by category placeholders.

    Examples
    --------
    >>> abstract_stream(tokenize('x = 42 + 2 + "hi";'))
    ['<id>', '=', '<int>', '+', '2', '+', '<str>', ';']
    """
    return [abstract_token(t, keep_zero) for t in tokens if not t.is_trivia]


def surprisal_bits(p: float) -> float:
    return -math.log2(p)


@dataclass
class NgramModel:
    order: int
    lambda_jm: float
    counts: List[Dict[tuple, int]]
    vocab: frozenset
    abstracted: bool = False
    keep_zero: bool = False
    totals: List[Dict[tuple, int]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if not 0.0 < self.lambda_jm < 1.0:
            raise ValueError("lambda_jm must lie in (0, 1)")
        if len(self.counts) != self.order:
            raise ValueError("need one count table per order")
        if not self.totals:
            self.totals = [context_totals(c) for c in self.counts]
        self._base = 1.0 / (len(self.vocab) + 1)

    # -- streams ------------------------------------------------------------

    def stream(self, tokens: Sequence[Token]) -> List[str]:
        """Modeled stream for lexed tokens (abstracted if the model is)."""
        if self.abstracted:
            return abstract_stream(tokens, self.keep_zero)
        return [t.text for t in tokens if not t.is_trivia]

    def stream_source(self, source: str) -> List[str]:
        return self.stream(tokenize(source))

    # -- probabilities --------------------------------------------------------

    def prob(self, context: Sequence[str], token: str) -> float:
        """Interpolated P(token | context); only the last order-1 items matter."""
        lam = self.lambda_jm
        p = self._base
        ctx = tuple(context[max(0, len(context) - (self.order - 1)):]) if self.order > 1 else ()
        n = len(ctx)
        for k in range(1, self.order + 1):
            if k - 1 > n:
                break
            c = ctx[n - (k - 1):] if k > 1 else ()
            total = self.totals[k - 1].get(c)
            if not total:
                continue
            ml = self.counts[k - 1].get(c + (token,), 0) / total
            p = lam * ml + (1.0 - lam) * p
        return p

    def surprisal(self, context: Sequence[str], token: str) -> float:
        return surprisal_bits(self.prob(context, token))

    def score_stream(self, stream: Sequence[str]) -> List[float]:
        """Per-token surprisal in bits, with context reset at the stream start."""
        h = self.order - 1
        return [self.surprisal(stream[max(0, i - h):i], t) for i, t in enumerate(stream)]

    def cross_entropy(self, stream: Sequence[str]) -> float:
        s = self.score_stream(stream)
        return sum(s) / len(s) if s else float("nan")

    def distribution(self, context: Sequence[str]) -> Dict[Optional[str], float]:
        """Full conditional distribution; key None holds the unseen-token mass."""
        out: Dict[Optional[str], float] = {t: self.prob(context, t) for t in self.vocab}
        out[None] = self.prob(context, _UNSEEN)
        return out

    def n_tokens(self) -> int:
        return self.totals[0].get((), 0)


# Stands in for any out-of-vocabulary token; cannot be produced by the lexer
# because it contains a NUL.
_UNSEEN = "\x00unseen"


def context_totals(table: Dict[tuple, int]) -> Dict[tuple, int]:
    totals: Dict[tuple, int] = Counter()
    for gram, c in table.items():
        totals[gram[:-1]] += c
    return dict(totals)


def count_ngrams(streams: Iterable[Sequence[str]], order: int) -> List[Counter]:
    """Count tables for orders 1..order; every stream is counted separately."""
    tables = [Counter() for _ in range(order)]
    for s in streams:
        s = list(s)
        for k in range(1, order + 1):
            if len(s) < k:
                break
            tables[k - 1].update(zip(*(s[j:] for j in range(k))))
    return tables


def merge_counts(a: Sequence[Counter], b: Sequence[Counter]) -> List[Counter]:
    if len(a) != len(b):
        raise ValueError("orders differ")
    return [Counter(x) + Counter(y) for x, y in zip(a, b)]


def train_streams(
    streams: Iterable[Sequence[str]],
    order: int = 6,
    lambda_jm: float = 0.5,
    abstracted: bool = False,
    keep_zero: bool = False,
) -> NgramModel:
    tables = count_ngrams(streams, order)
    if not tables[0]:
        raise ValueError("empty training corpus")
    vocab = frozenset(g[0] for g in tables[0])
    return NgramModel(order, lambda_jm, [dict(t) for t in tables], vocab, abstracted, keep_zero)


def train(
    sources: Iterable[str],
    order: int = 6,
    lambda_jm: float = 0.5,
    abstracted: bool = False,
    keep_zero: bool = False,
) -> NgramModel:
    """Train on Java source texts (comments and whitespace are not modeled)."""

    def streams():
        for src in sources:
            toks = tokenize(src)
            yield abstract_stream(toks, keep_zero) if abstracted else [t.text for t in significant(toks)]

    return train_streams(streams(), order, lambda_jm, abstracted, keep_zero)


def train_files(paths: Iterable, **kw) -> NgramModel:
    def read():
        for p in paths:
            yield Path(p).read_text(encoding="utf-8", errors="replace")

    return train(read(), **kw)


# -- cache -----------------------------------------------------------------------

class CacheState:
    """n-gram counts over the already-scored prefix of one file.

    ``add`` records a token, ``undo`` removes the most recent ones, so a
    scorer can try a variant and roll back to the shared prefix.
    """

    def __init__(self, order: int):
        self.order = order
        self.window: List[str] = []
        self.counts: List[Counter] = [Counter() for _ in range(order)]
        self.totals: List[Counter] = [Counter() for _ in range(order)]

    def _grams(self):
        w = self.window
        n = len(w)
        for k in range(1, min(self.order, n) + 1):
            gram = tuple(w[n - k:])
            yield k, gram

    def add(self, token: str) -> None:
        self.window.append(token)
        for k, gram in self._grams():
            self.counts[k - 1][gram] += 1
            self.totals[k - 1][gram[:-1]] += 1

    def undo(self, n: int = 1) -> None:
        for _ in range(n):
            if not self.window:
                raise IndexError("undo past start of cache")
            for k, gram in self._grams():
                for table, key in ((self.counts[k - 1], gram), (self.totals[k - 1], gram[:-1])):
                    table[key] -= 1
                    if not table[key]:
                        del table[key]
            self.window.pop()

    def prob(self, token: str) -> Optional[float]:
        """ML estimate at the longest cache context seen so far; None if empty."""
        w = self.window
        n = len(w)
        for k in range(min(self.order, n + 1), 0, -1):
            ctx = tuple(w[n - (k - 1):]) if k > 1 else ()
            total = self.totals[k - 1].get(ctx)
            if total:
                return self.counts[k - 1].get(ctx + (token,), 0) / total
        return None


def blend_prob(model: NgramModel, cache: CacheState, token: str, lambda_cache: float) -> float:
    """(1 - lc) * P_global + lc * P_cache at the cache's current position.

    An empty cache defines no distribution, so the global probability is used
    unchanged; otherwise a token absent from the cache context gets
    (1 - lc) * P_global.
    """
    w = cache.window
    pg = model.prob(w[max(0, len(w) - (model.order - 1)):], token)
    if lambda_cache == 0.0:
        return pg
    pc = cache.prob(token)
    if pc is None:
        return pg
    return (1.0 - lambda_cache) * pg + lambda_cache * pc


def score_with_cache(model: NgramModel, stream: Sequence[str], lambda_cache: float = 0.5) -> List[float]:
    """Per-token blended surprisal over one file, updating the cache as it goes."""
    if not 0.0 <= lambda_cache < 1.0:
        raise ValueError("lambda_cache must lie in [0, 1)")
    cache = CacheState(model.order)
    out = []
    for t in stream:
        out.append(surprisal_bits(blend_prob(model, cache, t, lambda_cache)))
        cache.add(t)
    return out


# -- persistence -----------------------------------------------------------------

def save(model: NgramModel, path) -> None:
    """Write a little-endian binary model file.

    Layout: header (magic, version, order, lambda, flags, vocab size), the
    sorted vocabulary as length-prefixed UTF-8, then per order the entry
    count and sorted (ids..., count) rows, then a CRC32 of all prior bytes.
    """
    vocab = sorted(model.vocab)
    index = {t: i for i, t in enumerate(vocab)}
    flags = (1 if model.abstracted else 0) | (2 if model.keep_zero else 0)
    parts = [_HEADER.pack(MAGIC, VERSION, model.order, model.lambda_jm, flags, len(vocab))]
    for t in vocab:
        b = t.encode("utf-8")
        parts.append(struct.pack("<I", len(b)))
        parts.append(b)
    for k, table in enumerate(model.counts, start=1):
        rows = sorted((tuple(index[t] for t in g), c) for g, c in table.items())
        parts.append(struct.pack("<Q", len(rows)))
        row = struct.Struct("<" + "I" * k + "Q")
        parts.extend(row.pack(*ids, c) for ids, c in rows)
    body = b"".join(parts)
    Path(path).write_bytes(body + struct.pack("<I", zlib.crc32(body)))


def load(path) -> NgramModel:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size + 4:
        raise ModelFormatError("file too short")
    magic, version, order, lam, flags, nvocab = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise ModelFormatError("bad magic bytes")
    if version != VERSION:
        raise ModelFormatError(f"unsupported model version {version}")
    body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) != crc:
        raise ModelFormatError("checksum mismatch (truncated or corrupt)")
    pos = _HEADER.size
    vocab = []
    try:
        for _ in range(nvocab):
            (n,) = struct.unpack_from("<I", body, pos)
            pos += 4
            vocab.append(body[pos:pos + n].decode("utf-8"))
            pos += n
        counts = []
        for k in range(1, order + 1):
            (rows,) = struct.unpack_from("<Q", body, pos)
            pos += 8
            row = struct.Struct("<" + "I" * k + "Q")
            table = {}
            for vals in row.iter_unpack(body[pos:pos + rows * row.size]):
                table[tuple(vocab[i] for i in vals[:-1])] = vals[-1]
            if len(table) != rows:
                raise ModelFormatError("truncated count table")
            pos += rows * row.size
            counts.append(table)
    except (struct.error, IndexError, UnicodeDecodeError) as exc:
        raise ModelFormatError(f"malformed model file: {exc}") from exc
    if pos != len(body):
        raise ModelFormatError("trailing bytes after count tables")
    return NgramModel(order, lam, counts, frozenset(vocab), bool(flags & 1), bool(flags & 2))
