import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.sparse.csgraph import minimum_spanning_tree

from mstlab import exact_engine as ee
from mstlab import mc_sim as mc
from mstlab.errors import ResourceLimitError

ZETA3 = 1.2020569031595942854


def _weight_matrix(n, seed, rep):
    """Materialized uniforms for small n, via the same keyed mixer."""
    base = mc._stream_base(seed, np.array([rep]))[0]
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            h = mc._mix64(base ^ mc._mix64(mc._pair_index(i, j, n)))
            w[i, j] = w[j, i] = float(mc._u01(h))
    return w


def _tree_from_scipy(w):
    t = minimum_spanning_tree(np.triu(w)).tocoo()
    return frozenset((min(i, j), max(i, j)) for i, j in zip(t.row, t.col))


def test_prim_against_scipy_and_transform_invariance():
    """Same tree from an independent MST code, under both weight models."""
    for rep in range(25):
        n = 12
        w = _weight_matrix(n, seed=7, rep=rep)
        ours = mc.mst_edge_set(n, seed=7, rep=rep)
        scipy_u = _tree_from_scipy(w)
        scipy_e = _tree_from_scipy(-np.log1p(-w) - np.diag(np.diag(-np.log1p(-w))))
        assert ours == scipy_u == scipy_e
        total = sum(w[i, j] for i, j in ours)
        assert total == pytest.approx(mc.mst_length(n, "uniform", seed=7, rep=rep), rel=1e-12)


def test_mst_length_small():
    # n = 2: the single edge weight, reproducible
    v = mc.mst_length(2, seed=3, rep=0)
    assert 0.0 <= v < 1.0
    assert v == mc.mst_length(2, seed=3, rep=0)
    est = mc.estimate_mean_mst(2, 20000, "uniform", seed=11)
    assert abs(est.mean - 0.5) <= 3 * est.std_error


def test_mean_n3_order_statistics():
    est = mc.estimate_mean_mst(3, 300000, "uniform", seed=5)
    assert abs(est.mean - 0.75) <= 3 * est.std_error


def test_bracket_exact_n5(table8):
    exact = float(ee.exact_expected_mst(5, table8).total)
    est = mc.estimate_mean_mst(5, 10**5, "uniform", seed=17)
    assert abs(est.mean - exact) <= 3 * est.std_error


def test_determinism_bit_exact():
    a = mc.estimate_mean_mst(6, 5000, "uniform", seed=42)
    b = mc.estimate_mean_mst(6, 5000, "uniform", seed=42)
    assert a == b
    c = mc.estimate_mean_mst(6, 5000, "uniform", seed=43)
    assert c.mean != a.mean
    assert mc.mst_length(50, seed=9, rep=4) == mc.mst_length(50, seed=9, rep=4)


def test_exponential_model_and_coupling():
    u = mc.estimate_mean_mst(4, 50000, "uniform", seed=2)
    e = mc.estimate_mean_mst(4, 50000, "exponential", seed=2)
    assert e.mean > u.mean  # -log(1-U) >= U pointwise
    g = mc.coupled_exp_uniform_diff(4, 50000, seed=2)
    assert g.mean == pytest.approx(e.mean - u.mean, rel=1e-12)
    # per-sample nonnegativity on raw chunks
    tu, te, _ = mc._prim_chunk(8, seed=1, rep0=0, reps=2000)
    assert np.all(te - tu >= 0)


def test_coupled_gap_n100():
    gap = mc.coupled_exp_uniform_diff(100, 2000, seed=13)
    assert abs(gap.mean - ZETA3 / 100) <= max(3 * gap.std_error, 1e-3)


@pytest.mark.slow
def test_coupled_gap_n400():
    gap = mc.coupled_exp_uniform_diff(400, 3000, seed=13)
    assert abs(gap.mean - ZETA3 / 400) <= max(3 * gap.std_error, 3e-4)
    assert gap.mean == pytest.approx(0.003005, abs=3e-4)


@pytest.mark.slow
def test_large_n_limit():
    """E(L_2000) sits within 0.01 of zeta(3)."""
    est = mc.estimate_mean_mst(2000, 1000, "uniform", seed=19)
    assert abs(est.mean - ZETA3) <= 0.01


def test_model_validation():
    with pytest.raises(ValueError):
        mc.estimate_mean_mst(5, 100, "weibull", seed=1)
    with pytest.raises(ValueError):
        mc.estimate_mean_mst(5, 1, "uniform", seed=1)
    with pytest.raises(ValueError):
        mc.mst_length(1)


def test_census_against_brute_force():
    for n in (3, 4):
        p = 0.5
        lam = (p - 1.0 / n) * n ** (4.0 / 3.0)
        rec = mc.gnp_component_census(n, lam, 200000, seed=23)
        exact = float(mc.brute_force_expected_components(n, Fraction(1, 2)))
        assert abs(rec.mean_components - exact) <= 3 * rec.se_components
        assert rec.p == pytest.approx(p, rel=1e-12)


def test_census_sparse_path_vs_exact_engine(table8):
    """n = 7 uses the skip-sampling path; compare with the exact formula."""
    n, p = 7, 0.3
    lam = (p - 1.0 / n) * n ** (4.0 / 3.0)
    rec = mc.gnp_component_census(n, lam, 40000, seed=29)
    exact = float(ee.expected_component_count(n, Fraction(3, 10), table8))
    assert abs(rec.mean_components - exact) <= 3.5 * rec.se_components
    assert rec.mean_trees + rec.mean_unicyclic + rec.mean_complex == pytest.approx(
        rec.mean_components, rel=1e-12)


def test_census_p_one():
    n = 30
    lam = (1.0 - 1.0 / n) * n ** (4.0 / 3.0)
    rec = mc.gnp_component_census(n, lam, 10, seed=1)
    assert rec.mean_components == 1.0
    assert rec.excess_histogram == {n * (n - 1) // 2 - n: 1.0}


def test_census_determinism_and_validation():
    a = mc.gnp_component_census(50, 0.5, 200, seed=3)
    b = mc.gnp_component_census(50, 0.5, 200, seed=3)
    assert a == b
    with pytest.raises(ValueError):
        mc.gnp_component_census(100, -1000.0, 10, seed=1)  # p < 0
    with pytest.raises(ValueError):
        mc.gnp_component_census(1, 0.0, 10)


def test_census_histogram_consistency():
    rec = mc.gnp_component_census(2000, 2.0, 300, seed=31)
    assert sum(rec.excess_histogram.values()) == pytest.approx(rec.mean_complex, rel=1e-9)
    assert all(j >= 1 for j in rec.excess_histogram)


def test_brute_force_components():
    for p in (Fraction(1, 3), Fraction(2, 5)):
        assert mc.brute_force_expected_components(2, p) == 2 - p
    with pytest.raises(ResourceLimitError):
        mc.brute_force_expected_components(6, Fraction(1, 2))


def test_brute_force_matches_formula(table8):
    for n, p in ((3, Fraction(1, 2)), (4, Fraction(1, 3)), (5, Fraction(1, 4))):
        assert (mc.brute_force_expected_components(n, p)
                == ee.expected_component_count(n, p, table8))


@pytest.mark.slow
def test_census_window_regimes_match_limit():
    """Large-n census against the window-limit curve f.

    Tolerances are the stated +-0.1 / 0.05 / 0.15 bands; 2500 replicates
    put the standard error near 0.01, far inside them.
    """
    from mstlab import constants as cn

    n, reps = 10**5, 2500
    at0 = mc.gnp_component_census(n, 0.0, reps, seed=37)
    assert abs(at0.mean_complex - cn.f_of_lambda(0.0)) <= 0.1
    atm5 = mc.gnp_component_census(n, -5.0, reps, seed=38)
    assert atm5.mean_complex < 0.05
    atp5 = mc.gnp_component_census(n, 5.0, reps, seed=39)
    assert abs(atp5.mean_complex - 1.0) <= 0.15
