"""Paired signed-rank tests, Hodges-Lehmann intervals, Bonferroni and OLS.

Only numpy is used at run time; scipy and statsmodels serve as reference
implementations in the test suite.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from statistics import NormalDist
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

EXACT_MAX_N = 25
VIF_WARN = 5.0


# -- ranks and exact null distributions --------------------------------------------

def midranks(values: Sequence[float]) -> np.ndarray:
    """Ranks 1..n with ties sharing the average rank."""
    a = np.asarray(values, dtype=float)
    order = np.argsort(a, kind="mergesort")
    ranks = np.empty(len(a), dtype=float)
    sorted_a = a[order]
    i = 0
    n = len(a)
    while i < n:
        j = i
        while j + 1 < n and sorted_a[j + 1] == sorted_a[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _subset_sum_counts(weights: Sequence[int]) -> List[int]:
    """counts[s] = number of subsets of ``weights`` summing to s."""
    total = sum(weights)
    counts = [0] * (total + 1)
    counts[0] = 1
    for w in weights:
        for s in range(total, w - 1, -1):
            counts[s] += counts[s - w]
    return counts


@lru_cache(maxsize=None)
def _untied_counts(n: int) -> Tuple[int, ...]:
    return tuple(_subset_sum_counts(list(range(1, n + 1))))


def exact_signed_rank_p(doubled_ranks: Sequence[int], doubled_w: int) -> float:
    """Two-sided exact p for the positive-rank sum, ranks given doubled.

    Doubling keeps mid-ranks integral. p = min(1, 2 * min(lower, upper tail)).
    """
    counts = _subset_sum_counts(list(doubled_ranks))
    n = len(doubled_ranks)
    lower = sum(counts[: doubled_w + 1])
    upper = sum(counts[doubled_w:])
    p = Fraction(2 * min(lower, upper), 2 ** n)
    return float(min(Fraction(1), p))


# -- Wilcoxon ------------------------------------------------------------------------

@dataclass
class WilcoxonResult:
    n: int
    n_nonzero: int
    statistic: float
    p_two_sided: float
    estimate: float
    ci_low: float
    ci_high: float
    ci_level: float
    alpha_adjusted: float
    method: str
    ci_method: str = "hodges-lehmann"

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def walsh_averages(d: Sequence[float]) -> np.ndarray:
    a = np.asarray(d, dtype=float)
    i, j = np.triu_indices(len(a))
    return np.sort((a[i] + a[j]) / 2.0)


def hl_critical_index(n: int, level: float) -> int:
    """1-based index k so that [A_k, A_{N-k+1}] covers at ``level``.

    Exact signed-rank quantiles for n <= 25, normal approximation above.
    Never less than 1.
    """
    alpha = 1.0 - level
    n_walsh = n * (n + 1) // 2
    if n <= EXACT_MAX_N:
        counts = _untied_counts(n)
        denom = 2 ** n
        k = 0
        cum = 0
        # largest k with P(T <= k - 1) <= alpha / 2
        while k < len(counts) and Fraction(cum + counts[k], denom) <= Fraction(alpha / 2):
            cum += counts[k]
            k += 1
    else:
        z = NormalDist().inv_cdf(1.0 - alpha / 2.0)
        k = int(math.floor(n * (n + 1) / 4.0 - z * math.sqrt(n * (n + 1) * (2 * n + 1) / 24.0)))
    return int(min(max(k, 1), (n_walsh + 1) // 2))


def hodges_lehmann_ci(d: Sequence[float], level: float = 0.95) -> Tuple[float, float, float]:
    """(estimate, low, high) from Walsh averages of all differences."""
    walsh = walsh_averages(d)
    if len(walsh) == 0:
        return (float("nan"),) * 3
    k = hl_critical_index(len(d), level)
    return float(np.median(walsh)), float(walsh[k - 1]), float(walsh[len(walsh) - k])


def wilcoxon_signed_rank(deltas: Sequence[float], level: float = 0.95, family_size: int = 1) -> WilcoxonResult:
    """Two-sided paired signed-rank test of ``deltas`` against zero.

    Zero differences are dropped before ranking and tied magnitudes share
    mid-ranks. The p-value is exact (sign-pattern distribution computed by
    dynamic programming) when at most 25 nonzero differences remain, and
    otherwise uses the normal approximation with tie and continuity
    corrections. The interval is Hodges-Lehmann at ``widen_ci(level,
    family_size)``.

    Examples
    --------
    >>> r = wilcoxon_signed_rank([1, 1, 1, 1, 1])
    >>> r.statistic, r.p_two_sided
    (15.0, 0.0625)
    """
    d = np.asarray(deltas, dtype=float)
    if d.size < 1:
        raise ValueError("need at least one difference")
    if np.any(~np.isfinite(d)):
        raise ValueError("differences must be finite")
    adj_level = widen_ci(level, family_size)
    alpha_adj = bonferroni(round(1.0 - level, 12), family_size)
    nz = d[d != 0]
    m = nz.size
    if m == 0:
        return WilcoxonResult(d.size, 0, 0.0, 1.0, 0.0, 0.0, 0.0, adj_level, alpha_adj, "degenerate")
    ranks = midranks(np.abs(nz))
    w_plus = float(ranks[nz > 0].sum())
    if m <= EXACT_MAX_N:
        doubled = [int(round(2 * r)) for r in ranks]
        p = exact_signed_rank_p(doubled, int(round(2 * w_plus)))
        method = "exact"
    else:
        mean = m * (m + 1) / 4.0
        _, tie_sizes = np.unique(ranks, return_counts=True)
        var = m * (m + 1) * (2 * m + 1) / 24.0 - float(np.sum(tie_sizes ** 3 - tie_sizes)) / 48.0
        dev = max(abs(w_plus - mean) - 0.5, 0.0)
        p = 1.0 if var <= 0 else min(1.0, math.erfc(dev / math.sqrt(var) / math.sqrt(2.0)))
        method = "normal"
    est, lo, hi = hodges_lehmann_ci(d, adj_level)
    return WilcoxonResult(d.size, m, w_plus, p, est, lo, hi, adj_level, alpha_adj, method)


def bonferroni(alpha: float, m: int) -> float:
    if m < 1:
        raise ValueError("family size must be >= 1")
    return alpha / m


def widen_ci(level: float, m: int) -> float:
    """Confidence level after a Bonferroni split over ``m`` intervals."""
    return 1.0 - bonferroni(1.0 - level, m)


# -- OLS -------------------------------------------------------------------------------

class RankDeficiencyError(ValueError):
    def __init__(self, columns: Sequence[str]):
        super().__init__("design matrix is rank deficient; collinear columns: " + ", ".join(columns))
        self.columns = list(columns)


@dataclass
class OlsResult:
    names: List[str]
    coefficients: np.ndarray
    std_errors: np.ndarray
    r_squared: float
    n_used: int
    n_removed_outliers: int
    vif: Dict[str, float]
    removed_rows: np.ndarray = field(default_factory=lambda: np.array([], dtype=int))
    residuals: Optional[np.ndarray] = None

    def coef(self, name: str) -> float:
        return float(self.coefficients[self.names.index(name)])

    def se(self, name: str) -> float:
        return float(self.std_errors[self.names.index(name)])

    def to_dict(self) -> dict:
        return {
            "coefficients": {n: float(c) for n, c in zip(self.names, self.coefficients)},
            "std_errors": {n: float(s) for n, s in zip(self.names, self.std_errors)},
            "r_squared": self.r_squared,
            "n_used": self.n_used,
            "n_removed_outliers": self.n_removed_outliers,
            "vif": self.vif,
        }


def _check_rank(X: np.ndarray, names: Sequence[str]) -> None:
    if np.linalg.matrix_rank(X) == X.shape[1]:
        return
    bad = []
    kept = np.empty((X.shape[0], 0))
    for j, name in enumerate(names):
        trial = np.column_stack([kept, X[:, j]])
        if np.linalg.matrix_rank(trial) > kept.shape[1]:
            kept = trial
        else:
            bad.append(name)
    raise RankDeficiencyError(bad)


def _fit(X: np.ndarray, y: np.ndarray):
    beta, *_ = np.linalg.lstsq(X, y, rcond=None)
    resid = y - X @ beta
    n, p = X.shape
    dof = max(n - p, 1)
    s2 = float(resid @ resid) / dof
    xtx_inv = np.linalg.inv(X.T @ X)
    se = np.sqrt(np.maximum(np.diag(xtx_inv) * s2, 0.0))
    return beta, se, resid, s2, xtx_inv


def cooks_distance(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    beta, _, resid, s2, xtx_inv = _fit(X, y)
    h = np.einsum("ij,jk,ik->i", X, xtx_inv, X)
    p = X.shape[1]
    with np.errstate(divide="ignore", invalid="ignore"):
        return resid ** 2 / (p * s2) * h / (1.0 - h) ** 2


def vif(X: np.ndarray, names: Sequence[str]) -> Dict[str, float]:
    """Variance inflation of each column of ``X`` (intercept excluded).

    Each column is regressed on the others plus a constant.
    """
    out = {}
    n, p = X.shape
    for j, name in enumerate(names):
        others = np.column_stack([np.ones(n)] + [X[:, k] for k in range(p) if k != j])
        target = X[:, j]
        beta, *_ = np.linalg.lstsq(others, target, rcond=None)
        resid = target - others @ beta
        sst = float(((target - target.mean()) ** 2).sum())
        r2 = 1.0 - float(resid @ resid) / sst if sst > 0 else 1.0
        out[name] = float("inf") if r2 >= 1.0 else 1.0 / (1.0 - r2)
    return out


def ols_fit(
    y: Sequence[float],
    X: np.ndarray,
    names: Sequence[str],
    intercept: bool = True,
    cook_filter: bool = True,
) -> OlsResult:
    """Least squares with one Cook's-distance filtering pass (D > 4/n).

    Raises
    ------
    RankDeficiencyError
        If some columns are linear combinations of others.
    """
    y = np.asarray(y, dtype=float)
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    names = list(names)
    if X.shape[1] != len(names):
        raise ValueError("one name per design column is required")
    preds = X
    if intercept:
        X = np.column_stack([np.ones(len(y)), X])
        names_full = ["intercept"] + names
    else:
        names_full = names
    _check_rank(X, names_full)
    n = len(y)
    removed = np.array([], dtype=int)
    if cook_filter:
        d = cooks_distance(X, y)
        mask = ~(d > 4.0 / n)
        removed = np.flatnonzero(~mask)
        X, y, preds = X[mask], y[mask], preds[mask]
        _check_rank(X, names_full)
    beta, se, resid, _, _ = _fit(X, y)
    if intercept:
        sst = float(((y - y.mean()) ** 2).sum())
    else:
        sst = float((y ** 2).sum())
    r2 = 1.0 - float(resid @ resid) / sst if sst > 0 else 1.0
    v = vif(preds, names) if preds.shape[1] > 1 else {names[0]: 1.0} if names else {}
    high = [k for k, val in v.items() if val >= VIF_WARN]
    if high:
        warnings.warn(f"VIF >= {VIF_WARN} for {', '.join(high)}", stacklevel=2)
    return OlsResult(names_full, beta, se, min(max(r2, 0.0), 1.0), len(y), len(removed), v, removed, resid)


def one_hot(values: Sequence[str], prefix: str) -> Tuple[np.ndarray, List[str]]:
    """Drop-first indicator columns over the sorted category levels."""
    levels = sorted(set(values))
    cols = levels[1:]
    mat = np.array([[1.0 if v == c else 0.0 for c in cols] for v in values]).reshape(len(values), len(cols))
    return mat, [f"{prefix}[{c}]" for c in cols]


def regression_design(
    records: Sequence[Mapping],
    numeric: Sequence[str] = ("original_surprisal", "log_num_tokens"),
    categorical: Sequence[str] = ("parent_kind", "dominant_operator"),
    min_count: int = 100,
    response: str = "delta",
) -> Tuple[np.ndarray, np.ndarray, List[str]]:
    """(y, X, names) after dropping rows whose categories are rarer than ``min_count``."""
    rows = list(records)
    for cat in categorical:
        counts: Dict[str, int] = {}
        for r in rows:
            counts[r[cat]] = counts.get(r[cat], 0) + 1
        rows = [r for r in rows if counts[r[cat]] >= min_count]
    if not rows:
        raise ValueError("no rows left after rare-category filtering")
    y = np.array([float(r[response]) for r in rows])
    blocks = [np.array([[float(r[c]) for c in numeric] for r in rows]).reshape(len(rows), len(numeric))]
    names = list(numeric)
    for cat in categorical:
        mat, cols = one_hot([r[cat] for r in rows], cat)
        blocks.append(mat)
        names.extend(cols)
    return y, np.hstack(blocks), names


# -- descriptives ------------------------------------------------------------------------

def descriptives(groups: Mapping[str, Iterable[float]], quantiles: Sequence[float] = (0.25, 0.5, 0.75)) -> List[dict]:
    """Per-group n, mean, median and quantiles, sorted by group key.

    Empty groups give a row of NaN (the NA row) with n = 0.
    """
    out = []
    for key in sorted(groups):
        vals = np.asarray(list(groups[key]), dtype=float)
        row = {"group": key, "n": int(vals.size)}
        if vals.size:
            row["mean"] = float(vals.mean())
            row["median"] = float(np.median(vals))
            for q in quantiles:
                row[f"q{q:g}"] = float(np.quantile(vals, q))
        else:
            row["mean"] = row["median"] = float("nan")
            for q in quantiles:
                row[f"q{q:g}"] = float("nan")
        out.append(row)
    return out
