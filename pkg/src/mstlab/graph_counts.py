"""Exact enumeration of connected labeled graphs by vertex and edge count.

C(k, l) is the number of connected graphs on vertex set {1..k} with l
edges.  The table is built by inclusion-exclusion on the component that
contains vertex 1:

    C(k, l) = binom(binom(k,2), l)
              - sum_{s=1}^{k-1} binom(k-1, s-1)
                    sum_m C(s, m) binom(binom(k-s,2), l-m)

Each row is handled as a polynomial in an edge-marking variable, packed
into a single big integer with fixed-width coefficient slots (Kronecker
substitution), so the inner double sum becomes one big-integer multiply
per smaller row.  With gmpy2 the full k_max = 60 table builds in a few
seconds.

Special cases with closed forms: Cayley's formula C(k, k-1) = k^{k-2}
and Renyi's unicyclic count C(k, k) = ((k-1)!/2) sum_{l=0}^{k-3} k^l/l!.

Empirical growth constants: C(k, k+j) ~ w_{j+1} k^{k+3j/2-1/2}.  The raw
ratio converges only like 1 + O(k^{-1/2}), so ``wright_from_counts``
extrapolates in powers of k^{-1/2} (the raw ratios are kept as
diagnostics).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import mpmath as mp

from .errors import ResourceLimitError

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

DEFAULT_MEMORY_BUDGET = 60


@dataclass
class CountTable:
    """Triangular table of connected-graph counts C(k, l), 1 <= k <= k_max."""

    k_max: int
    rows: list = field(repr=False)  # rows[k][l] = C(k, l), l = 0..binom(k,2)

    def count(self, k: int, l: int) -> int:
        """C(k, l); zero outside the feasible band k-1 <= l <= binom(k,2)."""
        if not 1 <= k <= self.k_max:
            raise ValueError(f"k={k} outside table range 1..{self.k_max}")
        if l < 0 or l > k * (k - 1) // 2:
            return 0
        return self.rows[k][l]

    def row_sum(self, k: int) -> int:
        """Total number of connected labeled graphs on k vertices."""
        return sum(self.rows[k])

    def to_csv(self, path) -> None:
        """Dump nonzero entries as rows (k, l, C)."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "l", "count"])
            for k in range(1, self.k_max + 1):
                for l, c in enumerate(self.rows[k]):
                    if c:
                        w.writerow([k, l, c])


def build_count_table(k_max: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> CountTable:
    """Populate C(k, l) for all 1 <= k <= k_max and all feasible l."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if k_max > memory_budget:
        raise ResourceLimitError(
            f"k_max={k_max} exceeds the configured budget {memory_budget}"
        )
    nedges = [k * (k - 1) // 2 for k in range(k_max + 1)]
    width = nedges[k_max] + 64  # slot width; products never overflow a slot
    mask = (mpz(1) << width) - 1

    # packed (1 + x)^{binom(r,2)}
    allg = []
    for r in range(k_max + 1):
        acc = mpz(0)
        for l in range(nedges[r] + 1):
            acc |= mpz(math.comb(nedges[r], l)) << (width * l)
        allg.append(acc)

    packed = [None] * (k_max + 1)
    for k in range(1, k_max + 1):
        acc = allg[k]
        for s in range(1, k):
            acc -= math.comb(k - 1, s - 1) * packed[s] * allg[k - s]
        packed[k] = acc

    rows = [None]
    for k in range(1, k_max + 1):
        v = packed[k]
        row = []
        for _ in range(nedges[k] + 1):
            row.append(int(v & mask))
            v >>= width
        rows.append(row)
    return CountTable(k_max=k_max, rows=rows)


def cayley_trees(k: int) -> int:
    """Number of labeled trees on k vertices, k^{k-2} (1 for k = 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1
    return k ** (k - 2)


def renyi_unicyclic(k: int) -> int:
    """Number of connected unicyclic labeled graphs on k vertices.

    ((k-1)!/2) * sum_{l=0}^{k-3} k^l / l!, an integer for every k >= 3.
    """
    if k < 3:
        raise ValueError("unicyclic graphs need k >= 3")
    # sum k^l (k-3)!/l! is integral; divide the (k-3)! back out at the end
    fk3 = math.factorial(k - 3)
    s = sum(k**l * (fk3 // math.factorial(l)) for l in range(k - 2))
    return math.factorial(k - 1) * s // (2 * fk3)


@dataclass
class WrightRatioEstimate:
    """Empirical estimate of the growth constant w_l from exact counts."""

    ell: int
    estimate: float          # Richardson-extrapolated value
    ratio: float             # raw ratio at k_max
    ratio_half: float        # raw ratio at k_max // 2 (convergence diagnostic)
    points: dict             # k -> raw ratio used in the extrapolation


def _raw_ratio(table: CountTable, k: int, ell: int) -> mp.mpf:
    j = ell - 1
    c = table.count(k, k + j)
    return mp.mpf(c) / mp.mpf(k) ** (k + mp.mpf(3 * j) / 2 - mp.mpf(1) / 2)


def wright_from_counts(ell: int, table: CountTable) -> WrightRatioEstimate:
    """Estimate w_l from C(k, k+l-1) ~ w_l k^{k+3(l-1)/2-1/2}.

    Fits ratio(k) = w + a1 k^{-1/2} + a2 k^{-1} + a3 k^{-3/2} at
    k in {k_max, 3k/4, k/2, k/4}.  For l = 0 the ratio is identically 1.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    k = table.k_max
    ks = sorted({k, 3 * k // 4, k // 2, k // 4}, reverse=True)
    ks = [kk for kk in ks if kk >= 1 and kk + ell - 1 <= kk * (kk - 1) // 2 and kk + ell - 1 >= 0]
    if len(ks) < 4 or table.count(ks[-1], ks[-1] + ell - 1) == 0:
        raise ValueError(f"k_max={k} too small to estimate w_{ell}")
    with mp.workdps(30):
        n = len(ks)
        A = mp.matrix(n, n)
        b = mp.matrix(n, 1)
        for i, kk in enumerate(ks):
            for jj in range(n):
                A[i, jj] = mp.mpf(kk) ** (-mp.mpf(jj) / 2)
            b[i] = _raw_ratio(table, kk, ell)
        sol = mp.lu_solve(A, b)
        est = float(sol[0])
        raw = float(_raw_ratio(table, k, ell))
        raw_half = float(_raw_ratio(table, k // 2, ell))
    return WrightRatioEstimate(
        ell=ell,
        estimate=est,
        ratio=raw,
        ratio_half=raw_half,
        points={kk: float(_raw_ratio(table, kk, ell)) for kk in ks},
    )
