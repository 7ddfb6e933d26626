"""Brownian excursion area moments and the moment generating function psi.

Let X = int_0^1 e(s) ds be the area under the normalized Brownian
excursion.  The asymptotic expansion of the logarithmic derivative of the
Airy function,

    -Ai'(z)/Ai(z) = sqrt(z) * (1 + sum_{m>=1} g_m z^{-3m/2}),

has coefficients g_m = N_m / 2^{3m-1} with the integer recurrence

    N_1 = 1,   N_m = 2(4-3m) N_{m-1} - sum_{i=1}^{m-1} N_i N_{m-i},

obtained by inserting the ansatz into the Riccati equation u' = u^2 - z.
The N_m alternate in sign, so every term the recurrence accumulates has
the same sign and the computation is stable in floating point.  The area
moments are

    E X^n = sqrt(2 pi) * n! * 2^{-(n-1)/2} * |g_n| / Gamma((3n-1)/2),

e.g. E X = sqrt(pi/8), E X^2 = 5/12, E X^4 = 221/1008.  With
w_n = E X^n / n! (the growth constants of connected-graph counts,
C(k, k+j) ~ w_{j+1} k^{k+3j/2-1/2}), the mgf is the entire series

    psi(t) = E e^{tX} = sum_{n>=0} w_n t^n,

whose terms peak near n ~ t^2/12; truncation at L is certified by a
geometric bound on the decreasing term ratios past L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath as mp
import numpy as np

from .errors import PrecisionError, TruncationError

DEFAULT_DIGITS = 60
GUARD_DIGITS = 15


def _airy_series_integers(L: int, prec_dps: int) -> list:
    """N_1..N_L as mpf at working precision (no cancellation occurs)."""
    with mp.workdps(prec_dps):
        N = [mp.mpf(0)] * (L + 1)
        if L >= 1:
            N[1] = mp.mpf(1)
        for m in range(2, L + 1):
            conv = mp.fsum(N[i] * N[m - i] for i in range(1, m))
            N[m] = 2 * (4 - 3 * m) * N[m - 1] - conv
    return N


@dataclass
class MomentTable:
    """Moments m_l = E X^l for l = 0..L at the requested precision."""

    L: int
    working_digits: int
    moments: list = field(repr=False)        # mpf, index l
    log_moments: list = field(repr=False)    # mpf log m_l (l >= 1)

    def to_csv(self, path) -> None:
        import csv

        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["l", "moment", "wright"])
            for l in range(self.L + 1):
                w.writerow([l, mp.nstr(self.moments[l], 25),
                            mp.nstr(self.moments[l] / mp.factorial(l), 25)])


@dataclass
class WrightTable:
    """Growth constants w_l = E X^l / l!, plus log-space and float mirrors."""

    L: int
    working_digits: int
    w: list = field(repr=False)          # mpf
    log_w: list = field(repr=False)      # mpf, index l >= 1
    log_w_float: np.ndarray = field(repr=False)  # log_w_float[l-1] = log w_l


@lru_cache(maxsize=8)
def _tables(L: int, digits: int):
    wp = digits + GUARD_DIGITS
    N = _airy_series_integers(L + 1, wp)
    with mp.workdps(wp):
        log2 = mp.log(2)
        half_log_2pi = mp.log(2 * mp.pi) / 2
        log_m = [None] * (L + 2)
        log_w = [None] * (L + 2)
        for n in range(1, L + 2):
            log_g = mp.log(abs(N[n])) - (3 * n - 1) * log2
            lw = (half_log_2pi - mp.mpf(n - 1) / 2 * log2 + log_g
                  - mp.loggamma(mp.mpf(3 * n - 1) / 2))
            log_w[n] = lw
            log_m[n] = lw + mp.loggamma(n + 1)
        moments = [mp.mpf(1)] + [mp.exp(log_m[n]) for n in range(1, L + 1)]
        wrights = [mp.mpf(1)] + [mp.exp(log_w[n]) for n in range(1, L + 1)]
        # any moment sequence is log-convex (Cauchy-Schwarz); a violation
        # can only come from precision loss
        for l in range(1, L):
            if moments[l] ** 2 > moments[l - 1] * moments[l + 1] * (1 + mp.mpf(10) ** (-digits + 5)):
                raise PrecisionError(
                    f"log-convexity failed at l={l}; increase working digits"
                )
    mt = MomentTable(L=L, working_digits=digits, moments=moments,
                     log_moments=log_m[: L + 1])
    lwf = np.array([float(log_w[n]) for n in range(1, L + 2)])
    wt = WrightTable(L=L, working_digits=digits, w=wrights,
                     log_w=log_w, log_w_float=lwf)
    return mt, wt


def excursion_moments(L: int, digits: int = DEFAULT_DIGITS) -> MomentTable:
    """Table of E X^l for l = 0..L; deterministic for fixed (L, digits)."""
    if L < 0:
        raise ValueError("L must be >= 0")
    if digits < 30:
        raise ValueError("digits must be >= 30")
    return _tables(L, digits)[0]


def wright_table(L: int, digits: int = DEFAULT_DIGITS) -> WrightTable:
    """Table of w_l = E X^l / l! for l = 0..L."""
    if L < 0:
        raise ValueError("L must be >= 0")
    if digits < 30:
        raise ValueError("digits must be >= 30")
    return _tables(L, digits)[1]


@dataclass
class SeriesValue:
    """Series value with a certified truncation bound."""

    value: mp.mpf
    tail_bound: mp.mpf
    terms: int

    def __float__(self):
        return float(self.value)


def _series_tail_bound(table: WrightTable, t_abs, L: int):
    """Bound sum_{l>L} w_l |t|^l using the decreasing term ratios past L.

    Valid once the ratio r_l = w_{l+1}|t|/w_l is below 1; the w-table is
    kept one entry longer than L so r_L is always available.
    """
    lw = table.log_w
    log_t = mp.log(t_abs) if t_abs > 0 else mp.mpf("-inf")
    r = mp.exp(lw[L + 1] - lw[L] + log_t)
    if r >= 1:
        return None
    term_next = mp.exp(lw[L + 1] + (L + 1) * log_t)
    return term_next / (1 - r)


def _psi_sum(table: WrightTable, t, L: int, from_l: int):
    lw = table.log_w
    if t == 0:
        return mp.mpf(1) if from_l == 0 else mp.mpf(0)
    log_at = mp.log(abs(t))
    sign_flip = t < 0
    s = mp.mpf(1) if from_l == 0 else mp.mpf(0)
    start = max(1, from_l)
    peak = float(t) ** 2 / 12
    for l in range(start, L + 1):
        term = mp.exp(lw[l] + l * log_at)
        if sign_flip and l % 2 == 1:
            term = -term
        s += term
        if l > peak + 10 * math.sqrt(peak + 4) and abs(term) < mp.mpf(10) ** (-table.working_digits) * abs(s):
            break
    return s


def psi(t, L: int = 200, digits: int = DEFAULT_DIGITS, tol=None) -> SeriesValue:
    """psi(t) = sum_{l<=L} w_l t^l with a certified truncation bound.

    Raises TruncationError when the bound cannot be certified below
    ``tol`` (or at all, when the term ratio at L is still >= 1).
    """
    table = wright_table(L, digits)
    with mp.workdps(digits):
        t = mp.mpf(t)
        value = _psi_sum(table, t, L, from_l=0)
        bound = _series_tail_bound(table, abs(t), L) if t != 0 else mp.mpf(0)
    if bound is None:
        raise TruncationError(
            f"term ratio at L={L} not yet decreasing below 1 for t={t}",
            achieved_bound=None,
        )
    if tol is not None and bound > tol:
        raise TruncationError(
            f"certified bound {mp.nstr(bound, 5)} exceeds tol={tol} at L={L}",
            achieved_bound=bound,
        )
    return SeriesValue(value=value, tail_bound=bound, terms=L)


def psi2(t, L: int = 200, digits: int = DEFAULT_DIGITS, tol=None) -> SeriesValue:
    """psi2(t) = psi(t) - 1 - sqrt(pi/8) t = sum_{l>=2} w_l t^l."""
    table = wright_table(L, digits)
    with mp.workdps(digits):
        t = mp.mpf(t)
        value = _psi_sum(table, t, L, from_l=2)
        bound = _series_tail_bound(table, abs(t), L) if t != 0 else mp.mpf(0)
    if bound is None:
        raise TruncationError(
            f"term ratio at L={L} not yet decreasing below 1 for t={t}",
            achieved_bound=None,
        )
    if tol is not None and bound > tol:
        raise TruncationError(
            f"certified bound {mp.nstr(bound, 5)} exceeds tol={tol} at L={L}",
            achieved_bound=bound,
        )
    return SeriesValue(value=value, tail_bound=bound, terms=L)


def excursion_density_approx(x: float) -> float:
    """Leading large-x form of the area density, (72 sqrt6/sqrt pi) x^2 e^{-6x^2}.

    An asymptote with relative error O(x^{-2}); not a probability density
    on its own (its total mass is 3).
    """
    if x <= 0:
        raise ValueError("x must be > 0")
    return 72.0 * math.sqrt(6.0) / math.sqrt(math.pi) * x * x * math.exp(-6.0 * x * x)


# ---------------------------------------------------------------------------
# fast double-precision series helpers (used by the constants engine; the
# certified mpf path above is authoritative)

def log_psi2_float(t: float, table: WrightTable) -> float:
    """log psi2(t) for t > 0 in double precision with log-sum-exp scaling."""
    lw = table.log_w_float
    L = table.L
    a = lw[1:L] + np.arange(2, L + 1) * math.log(t)
    m = a.max()
    return m + math.log(np.exp(a - m).sum())


def psi2_over_t2_float(t: float, table: WrightTable) -> float:
    """psi2(t)/t^2, stable as t -> 0 (limit w_2 = 5/24)."""
    if t < 1e-8:
        lw = table.log_w_float
        return math.exp(lw[1]) + math.exp(lw[2]) * t + math.exp(lw[3]) * t * t
    return math.exp(log_psi2_float(t, table) - 2.0 * math.log(t))
