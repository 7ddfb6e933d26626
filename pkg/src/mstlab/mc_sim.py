"""Monte Carlo corroboration: MST sampling and the G(n,p) component census.

Edge weights never materialize as an n x n array: the weight of pair
(i, j) in replicate r is a pure function of (seed, r, pair index) through
a SplitMix64 finalizer (the standard 64-bit avalanche mixer), so a
replicate is reproducible bit-exactly from its key.  The MST itself is
Prim's dense O(n^2) scan vectorized across a chunk of replicates.

Exponential weights reuse the same uniforms via -log(1-U); the transform
is strictly increasing, so the selected tree is identical in both models
and the per-replicate difference of tree weights is a low-variance
estimator of the expectation gap.

G(n,p) is sampled by geometric skips over the lexicographic pair order
(O(edges) per replicate, counter-based Philox streams) with components
and per-component edge counts from scipy's union-find-equivalent
connected_components; for tiny n every labeled graph is precomputed into
a lookup table instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ResourceLimitError

_GOLD = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _mix64(x):
    """SplitMix64 finalizer; full-avalanche 64-bit mixing."""
    z = np.asarray(x, dtype=np.uint64).copy()
    z ^= z >> np.uint64(30)
    z *= _MIX1
    z ^= z >> np.uint64(27)
    z *= _MIX2
    z ^= z >> np.uint64(31)
    return z


def _u01(h):
    """Top 53 bits to a uniform in [0, 1); never returns 1.0."""
    return (h >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def _stream_base(seed: int, reps):
    """One 64-bit stream base per replicate index."""
    r = np.asarray(reps, dtype=np.uint64)
    s = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    with np.errstate(over="ignore"):
        return _mix64(_mix64(s * _GOLD + r) + _GOLD)


def _pair_index(i, j, n):
    """Lexicographic index of pair (i < j) among the binom(n,2) pairs."""
    i = np.asarray(i, dtype=np.uint64)
    j = np.asarray(j, dtype=np.uint64)
    nn = np.uint64(n)
    two = np.uint64(2)
    one = np.uint64(1)
    return i * (two * nn - i - one) // two + (j - i - one)


def _pair_decode(idx, n):
    """Inverse of _pair_index with exact integer correction."""
    idx = np.asarray(idx, dtype=np.int64)
    b = 2 * n - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * idx)) / 2).astype(np.int64)
    i -= i * (2 * n - i - 1) // 2 > idx
    i += (i + 1) * (2 * n - i - 2) // 2 <= idx
    j = idx - i * (2 * n - i - 1) // 2 + i + 1
    return i, j


@dataclass
class MCEstimate:
    mean: float
    std_error: float
    reps: int
    seed: int
    model: str
    n: int = 0

    def to_json(self) -> dict:
        return {"mean": self.mean, "std_error": self.std_error,
                "reps": self.reps, "seed": self.seed, "model": self.model,
                "n": self.n}


def _prim_chunk(n, seed, rep0, reps, want_edges=False):
    """Prim over complete graphs for replicates rep0..rep0+reps-1.

    Returns (uniform totals, exponential totals, edge array or None);
    both totals come from the same uniforms.
    """
    base = _stream_base(seed, np.arange(rep0, rep0 + reps))
    rows = np.arange(reps)
    intree = np.zeros((reps, n), dtype=bool)
    best = np.full((reps, n), np.inf)
    best_src = np.zeros((reps, n), dtype=np.int32)
    tot_u = np.zeros(reps)
    tot_e = np.zeros(reps)
    cur = np.zeros(reps, dtype=np.int64)
    intree[:, 0] = True
    edges = np.zeros((reps, n - 1, 2), dtype=np.int32) if want_edges else None
    v = np.arange(n, dtype=np.int64)
    for step in range(n - 1):
        i = np.minimum(cur[:, None], v[None, :])
        j = np.maximum(cur[:, None], v[None, :])
        w = _u01(_mix64(base[:, None] ^ _mix64(_pair_index(i, j, n))))
        w[rows, cur] = np.inf
        upd = (w < best) & ~intree
        best[upd] = w[upd]
        best_src[upd] = np.broadcast_to(cur[:, None].astype(np.int32), (reps, n))[upd]
        masked = np.where(intree, np.inf, best)
        nxt = np.argmin(masked, axis=1)
        wmin = masked[rows, nxt]
        tot_u += wmin
        tot_e += -np.log1p(-wmin)
        if want_edges:
            edges[:, step, 0] = best_src[rows, nxt]
            edges[:, step, 1] = nxt
        intree[rows, nxt] = True
        cur = nxt
    return tot_u, tot_e, edges


def _prim_totals(n, reps, seed):
    chunk = max(1, (1 << 17) // max(n, 1))
    tot_u = np.empty(reps)
    tot_e = np.empty(reps)
    done = 0
    while done < reps:
        m = min(chunk, reps - done)
        u, e, _ = _prim_chunk(n, seed, done, m)
        tot_u[done:done + m] = u
        tot_e[done:done + m] = e
        done += m
    return tot_u, tot_e


def mst_length(n: int, model: str = "uniform", seed: int = 0, rep: int = 0) -> float:
    """Exact MST weight of one sampled instance (O(n^2) time, O(n) extra)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    u, e, _ = _prim_chunk(n, seed, rep, 1)
    return float(u[0] if model == "uniform" else e[0])


def mst_edge_set(n: int, seed: int = 0, rep: int = 0,
                 model: str = "uniform") -> frozenset:
    """Edge set of the sampled MST (model only reorders nothing: the
    uniform and exponential trees coincide; exposed for the invariance test)."""
    _, _, edges = _prim_chunk(n, seed, rep, 1, want_edges=True)
    return frozenset((min(int(a), int(b)), max(int(a), int(b)))
                     for a, b in edges[0])


def estimate_mean_mst(n: int, reps: int, model: str = "uniform",
                      seed: int = 0) -> MCEstimate:
    """Mean MST length with its standard error over independent replicates."""
    if reps < 2:
        raise ValueError("reps must be >= 2")
    if model not in ("uniform", "exponential"):
        raise ValueError(f"unknown model {model!r}")
    tot_u, tot_e = _prim_totals(n, reps, seed)
    t = tot_u if model == "uniform" else tot_e
    return MCEstimate(mean=float(t.mean()),
                      std_error=float(t.std(ddof=1) / math.sqrt(reps)),
                      reps=reps, seed=seed, model=model, n=n)


def coupled_exp_uniform_diff(n: int, reps: int, seed: int = 0) -> MCEstimate:
    """E_exp(L_n) - E(L_n) via the same uniforms (identical tree, low variance)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    tot_u, tot_e = _prim_totals(n, reps, seed)
    d = tot_e - tot_u
    return MCEstimate(mean=float(d.mean()),
                      std_error=float(d.std(ddof=1) / math.sqrt(reps)),
                      reps=reps, seed=seed, model="coupled", n=n)


# ---------------------------------------------------------------------------
# G(n,p) component census

@dataclass
class CensusRecord:
    n: int
    lam: float
    p: float
    reps: int
    seed: int
    mean_components: float
    se_components: float
    mean_trees: float
    se_trees: float
    mean_unicyclic: float
    se_unicyclic: float
    mean_complex: float
    se_complex: float
    excess_histogram: dict = field(default_factory=dict)  # j >= 1 -> mean count

    CSV_HEADER = ["n", "lambda", "p", "reps", "seed",
                  "mean_components", "se_components", "mean_trees", "se_trees",
                  "mean_unicyclic", "se_unicyclic", "mean_complex", "se_complex",
                  "excess_histogram"]

    def csv_row(self) -> list:
        hist = ";".join(f"{j}:{v:.6g}" for j, v in sorted(self.excess_histogram.items()))
        return [self.n, self.lam, self.p, self.reps, self.seed,
                self.mean_components, self.se_components,
                self.mean_trees, self.se_trees,
                self.mean_unicyclic, self.se_unicyclic,
                self.mean_complex, self.se_complex, hist]


@lru_cache(maxsize=4)
def _census_lut(n: int):
    """Per-graph class counts for every labeled graph on n vertices."""
    m = n * (n - 1) // 2
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    ntree = np.zeros(1 << m, dtype=np.int8)
    nuni = np.zeros(1 << m, dtype=np.int8)
    ncplx = np.zeros(1 << m, dtype=np.int8)
    ncomp = np.zeros(1 << m, dtype=np.int8)
    maxj = m - n
    hist = np.zeros((1 << m, max(maxj, 0) + 1), dtype=np.int8)  # excess j>=1
    for mask in range(1 << m):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        esel = [pairs[b] for b in range(m) if mask >> b & 1]
        for a, b in esel:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        sizes = {}
        ecnt = {}
        for vtx in range(n):
            r = find(vtx)
            sizes[r] = sizes.get(r, 0) + 1
            ecnt.setdefault(r, 0)
        for a, b in esel:
            ecnt[find(a)] += 1
        assert sum(sizes.values()) == n and sum(ecnt.values()) == len(esel)
        ncomp[mask] = len(sizes)
        for r, sz in sizes.items():
            j = ecnt[r] - sz
            if j == -1:
                ntree[mask] += 1
            elif j == 0:
                nuni[mask] += 1
            else:
                ncplx[mask] += 1
                hist[mask, j - 1] += 1
    return ntree, nuni, ncplx, ncomp, hist


def _census_small(n, p, reps, seed):
    m = n * (n - 1) // 2
    ntree, nuni, ncplx, ncomp, hist = _census_lut(n)
    rng = np.random.Generator(np.random.Philox(key=np.array([seed, 0], dtype=np.uint64)))
    per = np.empty((reps, 4))
    hsum = np.zeros(hist.shape[1])
    done = 0
    while done < reps:
        k = min(reps - done, 1 << 18)
        bits = rng.random((k, m)) < p
        masks = (bits.astype(np.uint32) << np.arange(m, dtype=np.uint32)).sum(axis=1)
        per[done:done + k] = np.stack(
            [ntree[masks], nuni[masks], ncplx[masks], ncomp[masks]], axis=1)
        hsum += hist[masks].sum(axis=0)
        done += k
    hsum /= reps
    return per, {j + 1: float(hsum[j]) for j in range(hsum.shape[0]) if hsum[j] > 0}


def _census_sparse(n, p, reps, seed):
    npairs = n * (n - 1) // 2
    per = np.zeros((reps, 4))
    hacc = {}
    log1mp = math.log1p(-p)
    exp_edges = npairs * p
    for r in range(reps):
        rng = np.random.Generator(np.random.Philox(key=np.array([seed, r], dtype=np.uint64)))
        chunks = []
        pos = -1
        need = int(exp_edges * 1.2 + 10 * math.sqrt(exp_edges + 1) + 16)
        while True:
            u = rng.random(need)
            skips = np.floor(np.log1p(-u) / log1mp).astype(np.int64) + 1
            pos_new = pos + np.cumsum(skips)
            inside = pos_new < npairs
            chunks.append(pos_new[inside])
            if not inside.all():
                break
            pos = int(pos_new[-1])
            need = max(64, need // 8)
        idx = np.concatenate(chunks)
        m = len(idx)
        if m:
            i, j = _pair_decode(idx, n)
            g = coo_matrix((np.ones(m, dtype=np.int8), (i, j)), shape=(n, n))
            nc, lab = connected_components(g, directed=False)
            sizes = np.bincount(lab, minlength=nc)
            ecnt = np.bincount(lab[i], minlength=nc)
        else:
            nc = n
            sizes = np.ones(n, dtype=np.int64)
            ecnt = np.zeros(n, dtype=np.int64)
        if sizes.sum() != n or ecnt.sum() != m:
            raise AssertionError("census conservation violated")
        exc = ecnt - sizes
        per[r] = [(exc == -1).sum(), (exc == 0).sum(), (exc >= 1).sum(), nc]
        for j in np.unique(exc[exc >= 1]):
            hacc[int(j)] = hacc.get(int(j), 0) + int((exc == j).sum())
    hist = {j: v / reps for j, v in hacc.items()}
    return per[:, [0, 1, 2, 3]], hist


def gnp_component_census(n: int, lam: float, reps: int, seed: int = 0) -> CensusRecord:
    """Census of G(n, p) at p = 1/n + lam n^{-4/3} over ``reps`` replicates."""
    if n < 2:
        raise ValueError("n must be >= 2")
    p = 1.0 / n + lam * n ** (-4.0 / 3.0)
    if not 0.0 <= p <= 1.0 + 1e-15:
        raise ValueError(f"p = {p} outside [0, 1]")
    p = min(p, 1.0)
    if p == 1.0:
        m = n * (n - 1) // 2
        j = m - n
        per = np.tile([0.0, 0.0 if j >= 1 else 1.0, 1.0 if j >= 1 else 0.0, 1.0],
                      (reps, 1))
        hist = {j: 1.0} if j >= 1 else {}
    elif n * (n - 1) // 2 <= 15:
        per, hist = _census_small(n, p, reps, seed)
    else:
        per, hist = _census_sparse(n, p, reps, seed)
    se = per.std(axis=0, ddof=1) / math.sqrt(reps) if reps > 1 else np.zeros(4)
    mean = per.mean(axis=0)
    return CensusRecord(
        n=n, lam=lam, p=p, reps=reps, seed=seed,
        mean_trees=float(mean[0]), se_trees=float(se[0]),
        mean_unicyclic=float(mean[1]), se_unicyclic=float(se[1]),
        mean_complex=float(mean[2]), se_complex=float(se[2]),
        mean_components=float(mean[3]), se_components=float(se[3]),
        excess_histogram=hist,
    )


def brute_force_expected_components(n: int, p) -> Fraction:
    """Exact E kappa(G_{n,p}) by enumerating all 2^binom(n,2) graphs."""
    if n > 5:
        raise ResourceLimitError("brute force capped at n = 5")
    if n < 1:
        raise ValueError("n must be >= 1")
    p = Fraction(p)
    q = 1 - p
    m = n * (n - 1) // 2
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = Fraction(0)
    for mask in range(1 << m):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        e = 0
        for b, (x, y) in enumerate(pairs):
            if mask >> b & 1:
                e += 1
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[ry] = rx
        ncomp = len({find(v) for v in range(n)})
        total += ncomp * p**e * q ** (m - e)
    return total
