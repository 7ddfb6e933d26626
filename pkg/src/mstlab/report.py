"""Delimited output plus figure rendering for the CLI report paths.

Every subcommand writes machine-readable CSV/JSON; alongside it, a PNG
with the matching stem visualizes the same rows (suppressible with
--no-plot).  Rationals are serialized as exact "p/q" strings next to
30-digit decimals so nothing is lost downstream.
"""

from __future__ import annotations

import csv
import json
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

ZETA3 = 1.2020569031595942854


def write_csv(path, header, rows) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def write_json(path, payload) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)


def _fig_path(path) -> str:
    stem, _ = os.path.splitext(path)
    return stem + ".png"


def plot_exact(records, path) -> str:
    """E(L_n) against n with the zeta(3) asymptote and the class split."""
    ns = [r.n for r in records]
    tot = [float(r.total) for r in records]
    tree = [float(r.tree_part) for r in records]
    uni = [float(r.unicyclic_part) for r in records]
    cpx = [float(r.complex_part) for r in records]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.plot(ns, tot, "o-", ms=4, label="E(L_n)")
    ax1.axhline(ZETA3, color="gray", ls="--", lw=1, label="zeta(3)")
    ax1.set_xlabel("n")
    ax1.set_ylabel("expected MST length")
    ax1.legend(frameon=False)
    ax2.plot(ns, tree, "s-", ms=3, label="tree part")
    ax2.plot(ns, uni, "^-", ms=3, label="unicyclic part")
    ax2.plot(ns, cpx, "v-", ms=3, label="complex part")
    ax2.set_xlabel("n")
    ax2.set_ylabel("class integrals")
    ax2.set_yscale("log")
    ax2.legend(frameon=False)
    fig.tight_layout()
    out = _fig_path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_census(records, path, f_curve=None) -> str:
    """Mean class counts across the scaling window, optional f overlay."""
    lams = [r.lam for r in records]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.errorbar(lams, [r.mean_complex for r in records],
                yerr=[3 * r.se_complex for r in records],
                fmt="o-", ms=4, capsize=2, label="complex components")
    if f_curve is not None:
        xs, ys = f_curve
        ax.plot(xs, ys, "--", color="gray", lw=1.2, label="window limit f")
    ax.set_xlabel("window location")
    ax.set_ylabel("mean count")
    ax.legend(frameon=False)
    fig.tight_layout()
    out = _fig_path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_mc(estimates, path, exact=None) -> str:
    """MC means with 3-SE bars; optional exact values overlaid."""
    ns = [e.n for e in estimates]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.errorbar(ns, [e.mean for e in estimates],
                yerr=[3 * e.std_error for e in estimates],
                fmt="o", ms=4, capsize=3, label="MC mean +- 3 SE")
    if exact:
        ax.plot(list(exact.keys()), [float(v) for v in exact.values()],
                "x", color="crimson", ms=7, label="exact")
    ax.axhline(ZETA3, color="gray", ls="--", lw=1)
    ax.set_xlabel("n")
    ax.set_ylabel("MST length")
    ax.legend(frameon=False)
    fig.tight_layout()
    out = _fig_path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def plot_constants(partials, path, tail_value=None) -> str:
    """Partial sums of the complex-coefficient series against K."""
    ks = sorted(partials)
    vals = [partials[k] for k in ks]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.plot(ks, vals, "o-", ms=4, label="partial sum")
    if tail_value is not None:
        ax.axhline(tail_value, color="gray", ls="--", lw=1, label="tail-corrected")
    ax.set_xlabel("series terms")
    ax.set_ylabel("partial value")
    ax.set_xscale("log")
    ax.legend(frameon=False)
    fig.tight_layout()
    out = _fig_path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def parse_grid(spec: str):
    """start:stop:step grid (inclusive stop within half a step)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError("grid must be start:stop:step")
    start, stop, step = (float(p) for p in parts)
    if step <= 0 or stop < start:
        raise ValueError("grid needs step > 0 and stop >= start")
    k = int(math.floor((stop - start) / step + 0.5))
    return [start + i * step for i in range(k + 1)]
