import math
from fractions import Fraction

import mpmath as mp
import pytest

from mstlab import exact_engine as ee
from mstlab import mc_sim as mc
from mstlab.errors import ResourceLimitError

ZETA3 = 1.2020569031595942854
ZETA2 = math.pi**2 / 6
# S = zeta3 - 3 zeta2 - I_log, the unicyclic leading constant
S_UNI = 0.7483597910958562


def test_b_term_examples():
    for n in (2, 5, 9):
        assert ee.b_term(n, 1, -1) == 1
    assert ee.b_term(2, 2, -1) == 1
    # direct substitution gives 3! 0! / 4! (spec's inline arithmetic is off)
    assert ee.b_term(3, 3, 0) == Fraction(1, 4)


def test_b_term_domain():
    with pytest.raises(ValueError):
        ee.b_term(3, 4, -1)
    with pytest.raises(ValueError):
        ee.b_term(4, 3, -2)
    with pytest.raises(ValueError):
        ee.b_term(4, 3, 4)  # k+j > binom(k,2)


def test_a_term_examples(table8):
    for n in (2, 4, 7):
        assert ee.a_term(n, 1, -1, table8) == 1
    assert ee.a_term(2, 2, -1, table8) == Fraction(1, 2)  # int_0^1 p dp
    total = sum(ee.a_term(3, k, j, table8)
                for k in range(1, 4)
                for j in range(-1, k * (k - 1) // 2 - k + 1))
    assert total - 1 == Fraction(3, 4)


def test_ab_factorization(table8):
    for (n, k, j) in ((6, 4, 1), (8, 5, 3), (7, 3, 0)):
        t = ee.ab_term(n, k, j, table8)
        c = table8.count(k, k + j)
        assert t.a_value == Fraction(c * math.factorial(k + j),
                                     math.factorial(k)) * t.b_value


def test_tree_term_bound(table20):
    """A(k, k-1) <= k^{-3} e^{3/2} for every k once n >= 10.

    At n = 5 the k = n term exceeds the bound by 51% (the inequality
    drops second-order exponent terms that are only nonpositive for
    large k), so "for all n" is tested from n = 10 up.
    """
    bound = math.exp(1.5)
    for n in (10, 16, 20):
        for k in range(1, n + 1):
            assert float(ee.a_term(n, k, -1, table20)) <= bound / k**3 + 1e-15
    assert float(ee.a_term(5, 5, -1, table20)) > bound / 125  # the exception


def test_expected_component_count(table8):
    for p in (Fraction(1, 4), Fraction(1, 3)):
        assert ee.expected_component_count(2, p, table8) == 2 - p
    for n in (3, 5):
        assert ee.expected_component_count(n, Fraction(1), table8) == 1
    brute = mc.brute_force_expected_components(4, Fraction(1, 2))
    assert ee.expected_component_count(4, Fraction(1, 2), table8) == brute


def test_vertex_conservation(table8):
    for n in range(2, 9):
        for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            assert ee.expected_vertex_total(n, p, table8) == n


EXACT_VALUES = {
    2: Fraction(1, 2),
    3: Fraction(3, 4),
    4: Fraction(31, 35),
    5: Fraction(893, 924),
    6: Fraction(278, 273),
    7: Fraction(30739, 29172),
}


def test_exact_expected_mst_values(table8):
    for n, want in EXACT_VALUES.items():
        assert ee.exact_expected_mst(n, table8).total == want


def test_monotone_and_decomposition(table20):
    vals = {n: ee.exact_expected_mst(n, table20) for n in range(2, 13)}
    for n in range(2, 12):
        assert vals[n].total < vals[n + 1].total
    for v in vals.values():
        assert v.tree_part + v.unicyclic_part + v.complex_part - 1 == v.total
        assert v.total > 0


def test_budget_and_table_errors(table8):
    with pytest.raises(ResourceLimitError):
        ee.exact_expected_mst(31, table8)
    with pytest.raises(ValueError):
        ee.exact_expected_mst(12, table8)  # table only covers k <= 8
    with pytest.raises(ValueError):
        ee.exact_expected_mst(1, table8)


def test_limit_diagnostic(table60):
    """total - zeta(3) < 0 here and n (total - zeta3) rises toward c1.

    The positive side of c1 shows only at much larger n; on [15, 30] the
    scaled gap is still negative and increasing (|gap| decreasing),
    consistent with c1 > 0 > c2.
    """
    scaled = []
    for n in (15, 20, 25, 30):
        tot = float(ee.exact_expected_mst(n, table60).total)
        assert tot < ZETA3
        scaled.append(n * (tot - ZETA3))
    assert scaled == sorted(scaled)
    assert all(s < 0 for s in scaled)


def test_csv_row(table8):
    row = ee.exact_expected_mst(4, table8).csv_row()
    assert row[0] == 4
    assert row[1] == "31/35"
    assert abs(float(row[2]) - 31 / 35) < 1e-25


def test_float_parts_match_exact(table20):
    v = ee.exact_expected_mst(10, table20)
    with mp.workdps(35):
        tf = ee.tree_part_float(10, digits=35)
        uf = ee.unicyclic_part_float(10, digits=35)
        assert abs(tf - mp.mpf(v.tree_part.numerator) / v.tree_part.denominator) < mp.mpf(10) ** -20
        assert abs(uf - mp.mpf(v.unicyclic_part.numerator) / v.unicyclic_part.denominator) < mp.mpf(10) ** -20


def test_float_paths_agree():
    for n in (200, 1500):
        assert ee.tree_part_float(n, digits=15) == pytest.approx(
            float(ee.tree_part_float(n, digits=30)), rel=1e-11)
        assert ee.unicyclic_part_float(n, digits=15) == pytest.approx(
            float(ee.unicyclic_part_float(n, digits=30)), rel=1e-11)


def test_tree_part_monotone_toward_zeta3():
    """Approaches zeta(3) monotonically (from above: the +1/n term leads)."""
    vals = [ee.tree_part_float(n, digits=15) for n in (100, 1000, 10**4)]
    gaps = [v - ZETA3 for v in vals]
    assert all(g > 0 for g in gaps)
    assert gaps == sorted(gaps, reverse=True)
    assert gaps[-1] < 1e-3


@pytest.mark.xfail(strict=True,
                   reason="o(n^-4/3) decays ~ n^-1/6 relative; at n = 1e4 the "
                          "trend sits at -0.1786, outside the stated 10%")
def test_tree_trend_at_1e4_as_stated():
    n = 10**4
    trend = n ** (4 / 3) * (ee.tree_part_float(n, digits=15)
                            - ZETA3 - 3 * (ZETA2 - ZETA3) / (2 * n))
    assert abs(trend - (-0.16098)) <= 0.1 * 0.16098


def test_tree_trend_at_1e5():
    n = 10**5
    trend = n ** (4 / 3) * (ee.tree_part_float(n, digits=15)
                            - ZETA3 - 3 * (ZETA2 - ZETA3) / (2 * n))
    assert abs(trend - (-0.16098)) <= 0.1 * 0.16098


@pytest.mark.xfail(strict=True,
                   reason="the gap is the window term itself (2 c2b n^-1/3 ~ "
                          "-0.077 at n = 1e4); stated 1% needs n ~ 3e4 even "
                          "after removing it")
def test_unicyclic_leading_at_1e4_as_stated():
    n = 10**4
    lead = 2 * n * ee.unicyclic_part_float(n, digits=15)
    assert abs(lead - S_UNI) <= 0.01 * S_UNI


def test_unicyclic_leading_corrected_at_1e5():
    n = 10**5
    c2b = -0.8329841585
    lead = 2 * n * (ee.unicyclic_part_float(n, digits=15) - c2b * n ** (-4 / 3))
    assert abs(lead - S_UNI) <= 0.01 * S_UNI


@pytest.mark.xfail(strict=True,
                   reason="window-coefficient trend reaches its 10% band only "
                          "near n ~ 1e5 (measured -0.670 at n = 1e4)")
def test_unicyclic_window_trend_at_1e4_as_stated():
    n = 10**4
    trend = n ** (4 / 3) * (ee.unicyclic_part_float(n, digits=15) - S_UNI / (2 * n))
    assert abs(trend - (-0.83298)) <= 0.1 * 0.83298


def test_unicyclic_window_trend_at_3e5():
    n = 3 * 10**5
    trend = n ** (4 / 3) * (ee.unicyclic_part_float(n, digits=15) - S_UNI / (2 * n))
    assert abs(trend - (-0.83298)) <= 0.1 * 0.83298


def test_unicyclic_series_identity():
    val = ee.unicyclic_series(K=10**4, tail=True)
    assert abs(val - S_UNI) < 1e-8
    raw = ee.unicyclic_series(K=10**4, tail=False)
    assert 0.01 < S_UNI - raw < 0.05  # tail genuinely needed
