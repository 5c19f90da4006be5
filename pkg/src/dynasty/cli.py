"""Command line: ``dynasty {table,solve,curves,verify}``."""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import report
from .errors import ConfigError, DynastyError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out_dir, name: str):
    if out_dir is None:
        sys.stdout.write(text)
        return
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    (path / name).write_text(text)
    print(path / name, file=sys.stderr)


def _scenarios(args) -> list[report.Scenario]:
    if args.config:
        scs = report.load_config(args.config)
        if getattr(args, "scenario", None):
            scs = [s for s in scs if s.name == args.scenario]
            if not scs:
                raise ConfigError(f"no scenario named {args.scenario!r} in {args.config}")
        return scs
    cases = report.builtin_cases()
    if getattr(args, "case", None):
        return [cases[args.case]]
    return list(cases.values())


def _one(args) -> report.Scenario:
    scs = _scenarios(args)
    if len(scs) != 1:
        raise ConfigError("select exactly one scenario with --case or --config/--scenario")
    sc = scs[0]
    if args.eps is not None:
        sc = replace(sc, eps=args.eps)
    return sc


def cmd_table(args) -> int:
    scs = _scenarios(args)
    if args.eps is not None:
        scs = [replace(s, eps=args.eps) for s in scs]
    solved = report.table_rows(scs)
    _emit(report.table_csv(solved, args.precision), args.out, "table.csv")
    if args.config:
        return EXIT_OK
    bad = report.golden_mismatches(solved)
    for msg in bad:
        print(f"golden mismatch: {msg}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_solve(args) -> int:
    sc = _one(args)
    if args.n is not None:
        sc = replace(sc, n=args.n, n_range=None)
    name = f"trajectory_{sc.name}.csv"
    _emit(report.solve_csv(sc, args.precision), args.out, name)
    return EXIT_OK


def cmd_curves(args) -> int:
    sc = _one(args)
    if args.n_to is not None:
        sc = replace(sc, n=None, n_range=(args.n_from, args.n_to, args.stride))
    for path in report.curves(sc, args.out or ".", args.lorenz, args.precision, args.denominator):
        print(path, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = report.verify(args.depth, args.seed)
    _emit(report.verify_json(rep), args.out, f"verify_{args.depth}.json")
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dynasty", description="Finite-horizon dynastic consumption solver")
    sub = ap.add_subparsers(dest="command", required=True)
    cases = list(report.builtin_cases())

    def common(p, select=True):
        p.add_argument("--out", help="output directory (default: stdout for single files)")
        p.add_argument("--precision", type=int, default=6, help="significant digits; 17 = full")
        if select:
            p.add_argument("--config", help="INI scenario file")
            p.add_argument("--case", choices=cases, help="built-in reference case")
            p.add_argument("--eps", type=float, help="plateau tolerance")

    p = sub.add_parser("table", help="reproduce the reference table")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("solve", help="emit the optimal trajectory")
    common(p)
    p.add_argument("--scenario", help="section name inside --config")
    p.add_argument("--n", type=int, help="fixed horizon (default: optimal)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("curves", help="value, Gini and Lorenz curves with SVG charts")
    common(p)
    p.add_argument("--scenario", help="section name inside --config")
    p.add_argument("--n-from", type=int, default=1)
    p.add_argument("--n-to", type=int)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--lorenz", type=int, action="append", default=[], metavar="N")
    p.add_argument("--denominator", choices=["paper", "conventional"], default="paper")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("verify", help="run the invariant suite")
    common(p, select=False)
    p.add_argument("--depth", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DynastyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
