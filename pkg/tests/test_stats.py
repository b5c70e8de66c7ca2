import itertools
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natpref import stats

scipy_stats = pytest.importorskip("scipy.stats")
sm = pytest.importorskip("statsmodels.api")


def enumerate_p(d):
    """Two-sided signed-rank p by listing every sign pattern."""
    nz = [x for x in d if x != 0]
    if not nz:
        return 1.0
    mags = sorted(abs(x) for x in nz)
    rank = {}
    for v in set(mags):
        idx = [i + 1 for i, m in enumerate(mags) if m == v]
        rank[v] = Fraction(sum(idx), len(idx))
    ranks = [rank[abs(x)] for x in nz]
    w = sum(r for r, x in zip(ranks, nz) if x > 0)
    le = ge = 0
    for signs in itertools.product((0, 1), repeat=len(nz)):
        s = sum(r for r, b in zip(ranks, signs) if b)
        le += s <= w
        ge += s >= w
    return float(min(Fraction(1), Fraction(2 * min(le, ge), 2 ** len(nz))))


def test_all_positive():
    r = stats.wilcoxon_signed_rank([1, 1, 1, 1, 1])
    assert r.statistic == 15 and r.p_two_sided == 0.0625
    assert r.method == "exact"


def test_symmetric_pair():
    assert stats.wilcoxon_signed_rank([1, -1]).p_two_sided == 1.0


def test_all_zero():
    r = stats.wilcoxon_signed_rank([0.0, 0.0, 0.0])
    assert r.p_two_sided == 1.0 and (r.ci_low, r.ci_high) == (0.0, 0.0)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        stats.wilcoxon_signed_rank([])
    with pytest.raises(ValueError):
        stats.wilcoxon_signed_rank([1.0, float("nan")])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=10))
def test_exact_matches_enumeration(d):
    assert stats.wilcoxon_signed_rank(d).p_two_sided == enumerate_p(d)


def test_exact_matches_scipy():
    rng = np.random.default_rng(0)
    for _ in range(100):
        d = rng.normal(0.3, 1, rng.integers(3, 26))
        ours = stats.wilcoxon_signed_rank(d).p_two_sided
        ref = scipy_stats.wilcoxon(d, method="exact").pvalue
        assert ours == pytest.approx(ref, abs=1e-6)


def test_normal_regime_matches_scipy():
    rng = np.random.default_rng(1)
    for _ in range(50):
        # rounding makes ties and zeros
        d = np.round(rng.normal(0.2, 1, rng.integers(30, 200)), 1)
        ours = stats.wilcoxon_signed_rank(d)
        ref = scipy_stats.wilcoxon(d, zero_method="wilcox", correction=True, method="approx")
        assert ours.method == "normal"
        assert ours.p_two_sided == pytest.approx(ref.pvalue, rel=1e-9, abs=1e-12)


def test_hl_matches_brute_force():
    rng = np.random.default_rng(2)
    d = rng.normal(size=12)
    walsh = sorted((d[i] + d[j]) / 2 for i in range(12) for j in range(i, 12))
    est, lo, hi = stats.hodges_lehmann_ci(d, 0.95)
    # exact critical value for n = 12 at 95% is 14 (two-sided), so k = 14
    assert stats.hl_critical_index(12, 0.95) == 14
    assert (lo, hi) == (walsh[13], walsh[-14])
    assert est == pytest.approx(np.median(walsh))


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(-50, 50, allow_nan=False), min_size=2, max_size=40),
    st.floats(-100, 100, allow_nan=False),
)
def test_hl_shift_equivariance(d, c):
    r0 = stats.wilcoxon_signed_rank(d)
    r1 = stats.wilcoxon_signed_rank([x + c for x in d])
    assert r1.ci_low == pytest.approx(r0.ci_low + c, abs=1e-9)
    assert r1.ci_high == pytest.approx(r0.ci_high + c, abs=1e-9)
    assert r0.ci_low <= r0.estimate <= r0.ci_high


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-10, 10, allow_nan=False), min_size=2, max_size=60), st.integers(2, 40))
def test_widened_interval_contains_plain(d, m):
    plain = stats.wilcoxon_signed_rank(d)
    wide = stats.wilcoxon_signed_rank(d, family_size=m)
    assert wide.ci_low <= plain.ci_low and plain.ci_high <= wide.ci_high
    assert wide.alpha_adjusted == pytest.approx(0.05 / m)


@pytest.mark.parametrize("alpha, m, expected", [(0.05, 1, 0.05), (0.05, 20, 0.0025)])
def test_bonferroni(alpha, m, expected):
    assert stats.bonferroni(alpha, m) == pytest.approx(expected)
    assert stats.widen_ci(1 - alpha, m) == pytest.approx(1 - expected)


def test_bonferroni_rejects_empty_family():
    with pytest.raises(ValueError):
        stats.bonferroni(0.05, 0)


# -- OLS ---------------------------------------------------------------------------

def test_exact_line():
    x = np.arange(20.0)
    res = stats.ols_fit(2 * x, x[:, None], ["x"])
    assert res.coef("x") == pytest.approx(2.0)
    assert res.r_squared == pytest.approx(1.0)


def test_orthogonal_vif():
    a = np.array([1, -1, 1, -1, 1, -1, 1, -1], dtype=float)
    b = np.array([1, 1, -1, -1, 1, 1, -1, -1], dtype=float)
    c = np.array([1, 1, 1, 1, -1, -1, -1, -1], dtype=float)
    y = a + 2 * b - c + np.array([0.1, -0.1, 0.05, 0, 0, 0.02, -0.03, 0.01])
    res = stats.ols_fit(y, np.column_stack([a, b, c]), ["a", "b", "c"], cook_filter=False)
    assert all(v == pytest.approx(1.0) for v in res.vif.values())


def test_matches_statsmodels():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(300, 3))
    y = X @ [0.5, -1.0, 2.0] + rng.normal(size=300)
    res = stats.ols_fit(y, X, ["a", "b", "c"], cook_filter=False)
    ref = sm.OLS(y, sm.add_constant(X)).fit()
    assert np.allclose(res.coefficients, ref.params, atol=1e-10)
    assert np.allclose(res.std_errors, ref.bse, atol=1e-10)
    assert res.r_squared == pytest.approx(ref.rsquared)
    design = sm.add_constant(X)
    assert np.all(np.abs(design.T @ res.residuals) < 1e-8)


def test_cooks_distance_matches_statsmodels():
    rng = np.random.default_rng(4)
    X = sm.add_constant(rng.normal(size=(80, 2)))
    y = X @ [1.0, 2.0, -1.0] + rng.normal(size=80)
    ref = sm.OLS(y, X).fit().get_influence().cooks_distance[0]
    assert np.allclose(stats.cooks_distance(X, y), ref)


def test_cook_filter_refits_once():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(200, 1))
    y = 3 * X[:, 0] + rng.normal(size=200)
    y[:3] += 40
    res = stats.ols_fit(y, X, ["x"])
    assert set(range(3)) <= set(res.removed_rows.tolist())
    assert res.n_used == 200 - res.n_removed_outliers


def test_rank_deficiency_names_columns():
    rng = np.random.default_rng(6)
    a = rng.normal(size=50)
    b = rng.normal(size=50)
    with pytest.raises(stats.RankDeficiencyError) as info:
        stats.ols_fit(a + b, np.column_stack([a, b, a - b]), ["a", "b", "a_minus_b"])
    assert info.value.columns == ["a_minus_b"]


def test_high_vif_warns():
    rng = np.random.default_rng(7)
    a = rng.normal(size=100)
    b = a + rng.normal(scale=0.05, size=100)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        stats.ols_fit(a + rng.normal(size=100), np.column_stack([a, b]), ["a", "b"], cook_filter=False)
    assert any("VIF" in str(w.message) for w in caught)


def test_regression_design_drops_rare_levels():
    rows = [
        {"delta": float(i), "original_surprisal": i * 0.5, "log_num_tokens": 1.0 + i % 3,
         "parent_kind": "+" if i % 2 else "=", "dominant_operator": "rare" if i == 0 else "*"}
        for i in range(20)
    ]
    y, X, names = stats.regression_design(rows, min_count=2)
    assert len(y) == 19
    assert names == ["original_surprisal", "log_num_tokens", "parent_kind[=]"]
    with pytest.raises(ValueError):
        stats.regression_design(rows, min_count=100)


# -- descriptives ----------------------------------------------------------------------

def test_descriptives():
    rows = stats.descriptives({"b": [1, 2, 3], "a": []})
    assert [r["group"] for r in rows] == ["a", "b"]
    assert rows[1]["median"] == 2 and rows[1]["n"] == 3
    assert rows[0]["n"] == 0 and np.isnan(rows[0]["median"])


def test_quantiles_match_sorted_order():
    rng = np.random.default_rng(8)
    vals = rng.normal(size=101)
    (row,) = stats.descriptives({"g": vals}, quantiles=(0.1, 0.5, 0.9))
    s = np.sort(vals)
    assert row["q0.1"] == pytest.approx(s[10])
    assert row["q0.5"] == pytest.approx(s[50])
    assert row["q0.9"] == pytest.approx(s[90])
