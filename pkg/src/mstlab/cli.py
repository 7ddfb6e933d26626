"""Command-line front end.

Subcommands: constants, exact, mc, census, verify.  Every run is
deterministic given its flags (seeds included).  Outputs are CSV or JSON
with a PNG figure rendered alongside (same stem) unless --no-plot.

Exit codes: 0 success, 1 usage error, 2 computation error,
3 acceptance failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import acceptance, report
from . import constants as cn
from . import exact_engine as ee
from . import graph_counts as gc
from . import mc_sim as mc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> _Parser:
    p = _Parser(prog="mstlab",
                description="expected-MST-length laboratory: exact values, "
                            "expansion constants, simulation census")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("constants", help="expansion constants report")
    c.add_argument("--digits", type=int, default=60,
                   help="series working precision (default 60)")
    c.add_argument("--series-terms", type=int, default=1000, metavar="K",
                   help="series terms for the complex coefficient (default 1000)")
    c.add_argument("--no-tail", action="store_true",
                   help="omit the (non-rigorous) series tail model")
    c.add_argument("--out", default="out/constants.json",
                   help="output path (default out/constants.json)")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--no-plot", action="store_true")

    e = sub.add_parser("exact", help="exact rational E(L_n) over a range of n")
    e.add_argument("--n-min", type=int, default=2)
    e.add_argument("--n-max", type=int, default=12)
    e.add_argument("--out", default="out/exact.csv")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--no-plot", action="store_true")

    m = sub.add_parser("mc", help="Monte Carlo MST means / coupled gap")
    m.add_argument("--n", default="4,5,6,7,8,9",
                   help="comma-separated list of n (default 4..9)")
    m.add_argument("--reps", type=int, default=10**5)
    m.add_argument("--model", choices=("uniform", "exponential"), default="uniform")
    m.add_argument("--coupled", action="store_true",
                   help="estimate the exponential-uniform gap instead")
    m.add_argument("--seed", type=int, default=1)
    m.add_argument("--out", default="out/mc.csv")
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.add_argument("--no-plot", action="store_true")

    s = sub.add_parser("census", help="G(n,p) component census over a window grid")
    s.add_argument("--n", type=int, default=10**4)
    s.add_argument("--lambda-grid", default="-3:3:0.5", metavar="START:STOP:STEP",
                   help="window grid; use --lambda-grid=-3:3:0.5 when START is negative")
    s.add_argument("--reps", type=int, default=400)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--overlay-limit", action="store_true",
                   help="overlay the window-limit curve f on the figure")
    s.add_argument("--out", default="out/census.csv")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--no-plot", action="store_true")

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--fast", action="store_true",
                   help="smoke mode with reduced replicates (not the gate)")
    v.add_argument("--only", default="",
                   help="comma-separated criterion numbers, e.g. 1,2,3")
    v.add_argument("--strict", action="store_true",
                   help="known-defect rows also fail the exit status")
    return p


def _positive(parser, name, value):
    if value <= 0:
        parser.error(f"{name} must be positive (got {value})")


def _cmd_constants(args) -> int:
    rep = cn.c2_total(K=args.series_terms, digits=args.digits,
                      tail=not args.no_tail)
    if args.format == "json":
        report.write_json(args.out, rep.to_json())
    else:
        rows = [["zeta2", rep.zeta2], ["zeta3", rep.zeta3],
                ["I_log", rep.I_log], ["c1", rep.c1],
                ["c2a", rep.c2a], ["c2b", rep.c2b],
                ["c2c_partial", rep.c2c_partial], ["c2c", rep.c2c],
                ["c2", rep.c2], ["K", rep.K]]
        report.write_csv(args.out, ["name", "value"], rows)
    print(f"constants written to {args.out}")
    print(f"  c1 = {rep.c1:.7f}   c2 = {rep.c2:.4f}  "
          f"(c2a {rep.c2a:.5f}, c2b {rep.c2b:.5f}, c2c {rep.c2c:.5f})")
    if not args.no_plot:
        ks = sorted({100, 200, 400, args.series_terms})
        wt = cn._series_table(args.digits)
        partials = {}
        acc = 0.0
        prev = 0
        for k in sorted(ks):
            acc += sum(float(cn.pil_summand(i, wt)) for i in range(prev + 1, k + 1))
            partials[k] = acc
            prev = k
        fig = report.plot_constants(partials, args.out, tail_value=rep.c2c)
        print(f"figure written to {fig}")
    return 0


def _cmd_exact(args) -> int:
    table = gc.build_count_table(min(max(args.n_max, 5), 60))
    recs = [ee.exact_expected_mst(n, table, n_budget=max(30, args.n_max))
            for n in range(args.n_min, args.n_max + 1)]
    if args.format == "csv":
        report.write_csv(args.out, ee.ExactExpectation.CSV_HEADER,
                         [r.csv_row() for r in recs])
    else:
        report.write_json(args.out, [dict(zip(ee.ExactExpectation.CSV_HEADER,
                                              r.csv_row())) for r in recs])
    print(f"{len(recs)} rows written to {args.out}")
    for r in recs:
        print(f"  n={r.n:3d}  E(L_n) = {r.total} = {float(r.total):.12f}")
    if not args.no_plot:
        fig = report.plot_exact(recs, args.out)
        print(f"figure written to {fig}")
    return 0


def _cmd_mc(args) -> int:
    ns = [int(x) for x in args.n.split(",") if x.strip()]
    ests = []
    for n in ns:
        if args.coupled:
            ests.append(mc.coupled_exp_uniform_diff(n, args.reps, seed=args.seed))
        else:
            ests.append(mc.estimate_mean_mst(n, args.reps, args.model, seed=args.seed))
    header = ["n", "model", "reps", "seed", "mean", "std_error"]
    rows = [[e.n, e.model, e.reps, e.seed, e.mean, e.std_error] for e in ests]
    if args.format == "csv":
        report.write_csv(args.out, header, rows)
    else:
        report.write_json(args.out, [e.to_json() for e in ests])
    print(f"{len(ests)} rows written to {args.out}")
    for e in ests:
        print(f"  n={e.n:5d}  mean = {e.mean:.6f} +- {e.std_error:.2e}  ({e.model})")
    if not args.no_plot:
        exact = None
        if not args.coupled and max(ns) <= 12:
            table = gc.build_count_table(max(max(ns), 5))
            exact = {n: ee.exact_expected_mst(n, table).total for n in ns}
        fig = report.plot_mc(ests, args.out, exact=exact)
        print(f"figure written to {fig}")
    return 0


def _cmd_census(args) -> int:
    grid = report.parse_grid(args.lambda_grid)
    recs = [mc.gnp_component_census(args.n, lam, args.reps, seed=args.seed)
            for lam in grid]
    if args.format == "csv":
        report.write_csv(args.out, mc.CensusRecord.CSV_HEADER,
                         [r.csv_row() for r in recs])
    else:
        report.write_json(args.out, [dict(zip(mc.CensusRecord.CSV_HEADER, r.csv_row()))
                                     for r in recs])
    print(f"{len(recs)} rows written to {args.out}")
    for r in recs:
        print(f"  lambda={r.lam:6.2f}  complex = {r.mean_complex:.4f} "
              f"+- {r.se_complex:.4f}  components = {r.mean_components:.2f}")
    if not args.no_plot:
        curve = None
        if args.overlay_limit:
            xs = [grid[0] + i * (grid[-1] - grid[0]) / 40 for i in range(41)]
            curve = (xs, [cn.f_of_lambda(x) for x in xs])
        fig = report.plot_census(recs, args.out, f_curve=curve)
        print(f"figure written to {fig}")
    return 0


def _cmd_verify(args) -> int:
    only = {int(x) for x in args.only.split(",") if x.strip()} or None
    rows = acceptance.run_all(fast=args.fast, only=only)
    print(acceptance.format_table(rows))
    if args.fast:
        print("note: --fast reduces replicates; the acceptance gate is the full run")
    return 0 if acceptance.suite_ok(rows, strict=args.strict) else 3


def _validate(parser, args) -> None:
    for name in ("reps", "digits", "series_terms"):
        if hasattr(args, name):
            _positive(parser, name.replace("_", "-"), getattr(args, name))
    if args.cmd == "exact":
        if args.n_min < 2 or args.n_max < args.n_min:
            parser.error("need 2 <= n-min <= n-max")
        if args.n_max > 60:
            parser.error("exact path is configured for n-max <= 60")
    elif args.cmd == "mc":
        try:
            ns = [int(x) for x in args.n.split(",") if x.strip()]
        except ValueError:
            parser.error(f"--n must be a comma-separated integer list, got {args.n!r}")
        if not ns or min(ns) < 2:
            parser.error("every n must be >= 2")
    elif args.cmd == "census":
        if args.n < 2:
            parser.error("n must be >= 2")
        try:
            report.parse_grid(args.lambda_grid)
        except ValueError as exc:
            parser.error(str(exc))
    elif args.cmd == "constants":
        if args.series_terms < 100:
            parser.error("series-terms must be >= 100")
        if args.digits < 30:
            parser.error("digits must be >= 30")
    elif args.cmd == "verify" and args.only:
        try:
            ids = {int(x) for x in args.only.split(",") if x.strip()}
        except ValueError:
            parser.error(f"--only must list criterion numbers, got {args.only!r}")
        if ids - set(acceptance.CRITERIA):
            parser.error(f"unknown criteria in --only: {sorted(ids - set(acceptance.CRITERIA))}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    handlers = {"constants": _cmd_constants, "exact": _cmd_exact,
                "mc": _cmd_mc, "census": _cmd_census, "verify": _cmd_verify}
    try:
        return handlers[args.cmd](args)
    except SystemExit:
        raise
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"mstlab: computation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
