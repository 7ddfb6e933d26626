import math

import mpmath as mp
import pytest

from mstlab import excursion as ex
from mstlab import graph_counts as gc
from mstlab.errors import TruncationError

from oracles import excursion_density_inverted, excursion_tail_inverted

SQRT_PI_8 = math.sqrt(math.pi / 8)


@pytest.fixture(scope="module")
def mt():
    return ex.excursion_moments(220, digits=40)


@pytest.fixture(scope="module")
def wt():
    return ex.wright_table(220, digits=40)


def test_first_moments_exact(mt):
    assert mt.moments[0] == 1
    with mp.workdps(40):
        assert abs(mt.moments[1] - mp.sqrt(mp.pi / 8)) < mp.mpf(10) ** -35
        assert abs(mt.moments[2] - mp.mpf(5) / 12) < mp.mpf(10) ** -35
        # classical rational value of the fourth moment
        assert abs(mt.moments[4] - mp.mpf(221) / 1008) < mp.mpf(10) ** -35


def test_log_convexity(mt):
    m = mt.moments
    for l in range(1, mt.L):
        assert m[l] ** 2 <= m[l - 1] * m[l + 1] * (1 + mp.mpf(10) ** -30)


def test_moments_positive_and_asymptotic(mt):
    assert all(v > 0 for v in mt.moments)
    # E X^l ~ sqrt(18) l (12 e)^{-l/2} l^{l/2}
    with mp.workdps(40):
        for l in (100, 200):
            lead = mp.sqrt(18) * l * (12 * mp.e) ** (-mp.mpf(l) / 2) * mp.mpf(l) ** (mp.mpf(l) / 2)
            assert abs(mt.moments[l] / lead - 1) < 0.02


def test_wright_values(wt):
    assert wt.w[0] == 1
    with mp.workdps(40):
        assert abs(wt.w[1] - mp.sqrt(mp.pi / 8)) < mp.mpf(10) ** -35
    # w_l Gamma(l/2) 24^{l/2} / 6 -> 1
    with mp.workdps(40):
        r200 = wt.w[200] * mp.gamma(100) * mp.mpf(24) ** 100 / 6
        assert abs(r200 - 1) < 0.02
        ratios = [float(wt.w[l] * mp.gamma(mp.mpf(l) / 2) * mp.mpf(24) ** (mp.mpf(l) / 2) / 6)
                  for l in (50, 100, 200)]
    assert abs(ratios[2] - 1) < abs(ratios[1] - 1) < abs(ratios[0] - 1)


def test_wright_matches_graph_counts(table60):
    """Series constants against exact-count extrapolation, l <= 3."""
    wt = ex.wright_table(10, digits=40)
    for ell in (1, 2, 3):
        est = gc.wright_from_counts(ell, table60).estimate
        assert est == pytest.approx(float(wt.w[ell]), rel=0.03)


def test_determinism():
    a = ex.excursion_moments(30, digits=40)
    b = ex.excursion_moments(30, digits=40)
    assert all(x == y for x, y in zip(a.moments, b.moments))


def test_parameter_validation():
    with pytest.raises(ValueError):
        ex.excursion_moments(-1)
    with pytest.raises(ValueError):
        ex.excursion_moments(10, digits=10)


def test_psi_at_zero_and_derivative():
    assert float(ex.psi(0, L=100).value) == 1.0
    h = mp.mpf(10) ** -6
    with mp.workdps(45):
        d = (ex.psi(h, L=60, digits=45).value - ex.psi(-h, L=60, digits=45).value) / (2 * h)
    assert abs(float(d) - SQRT_PI_8) < 1e-4


def test_psi_large_t_law():
    """psi(t) = (t^2/2) e^{t^2/24} (1 + O(t^{-2})), constant ~ -4."""
    for t, L in ((10, 200), (20, 400), (40, 800)):
        v = float(ex.psi(t, L=L, digits=40).value)
        lead = t * t / 2 * math.exp(t * t / 24)
        assert 3.0 < abs(v / lead - 1) * t * t < 5.5


def test_psi_envelope():
    for i in range(25):
        t = 12 * i / 24
        v = float(ex.psi(t, L=300, digits=40).value)
        assert v >= 1 + SQRT_PI_8 * t - 1e-12
        assert v <= 1 + SQRT_PI_8 * t + 0.6 * t * t * math.exp(t * t / 24) + 1e-12


def test_psi_monotone_in_truncation():
    vals = [float(ex.psi(6.0, L=L, digits=40).value) for L in (10, 20, 40, 80)]
    assert vals == sorted(vals)


def test_psi_truncation_errors():
    with pytest.raises(TruncationError):
        ex.psi(50.0, L=60, digits=40)       # ratio still >= 1 at L
    with pytest.raises(TruncationError) as err:
        ex.psi(5.0, L=12, digits=40, tol=1e-30)
    assert err.value.achieved_bound is not None
    ok = ex.psi(5.0, L=80, digits=40, tol=1e-20)
    assert ok.tail_bound < 1e-20


def test_psi2_identities():
    assert float(ex.psi2(0, L=50).value) == 0.0
    v = ex.psi2(1e-4, L=50, digits=40).value
    assert abs(float(v) / 1e-8 - 5.0 / 24.0) < 1e-3
    with mp.workdps(40):
        lhs = ex.psi2(5.0, L=120, digits=40).value
        rhs = ex.psi(5.0, L=120, digits=40).value - 1 - mp.sqrt(mp.pi / 8) * 5
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_density_approx_value_and_shape():
    val = ex.excursion_density_approx(1.0)
    assert val == pytest.approx(72 * math.sqrt(6) / math.sqrt(math.pi) * math.exp(-6), rel=1e-12)
    assert val == pytest.approx(0.2467, abs=2e-4)
    xs = [0.5 + 0.1 * i for i in range(26)]
    vals = [ex.excursion_density_approx(x) for x in xs]
    assert all(b < a for a, b in zip(vals, vals[1:]))  # past the mode at 1/sqrt(6)
    with pytest.raises(ValueError):
        ex.excursion_density_approx(0.0)


def test_density_approx_vs_inversion():
    """Leading form vs the mgf-inverted density where it is an asymptote."""
    for x, tol in ((1.5, 0.06), (2.0, 0.04)):
        truth = excursion_density_inverted(x)
        approx = ex.excursion_density_approx(x)
        assert abs(approx / truth - 1) < tol
    # integrated tail in the asymptotic regime
    p = excursion_tail_inverted(1.3)
    with mp.workdps(30):
        ia = mp.quad(lambda u: ex.excursion_density_approx(float(u)), [1.3, 2, 4])
    assert abs(float(ia) / p - 1) < 0.10


def test_moment_table_csv(tmp_path):
    mt = ex.excursion_moments(12, digits=30)
    path = tmp_path / "moments.csv"
    mt.to_csv(path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "l,moment,wright"
    assert len(lines) == 14
    l2 = lines[2].split(",")
    assert float(l2[1]) == pytest.approx(SQRT_PI_8, rel=1e-12)


def test_fast_float_mirror():
    wt = ex.wright_table(400, digits=40)
    for t in (1.0, 5.0, 20.0):
        ref = float(ex.psi2(t, L=400, digits=40).value)
        fast = math.exp(ex.log_psi2_float(t, wt))
        assert fast == pytest.approx(ref, rel=1e-12)
    assert ex.psi2_over_t2_float(0.0, wt) == pytest.approx(5.0 / 24.0, rel=1e-12)
