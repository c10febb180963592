"""Command-line entry point: ``skab <subcommand> [--s S] ...``.

Exit status is 0 on success, 1 on domain or I/O errors and 2 on usage
errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .curve_params import make_params
from .errors import DomainError
from .order_bound import best_one_point, bound_report, default_horizon
from .report import SweepConfig, export, sweep
from .semigroup import NumericalSemigroup
from .tau import TauTable
from .two_point import figure_points, in_semigroup, nu_p, nu_pinf, rr_dim


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "text":
        for key, val in obj.items():
            if isinstance(val, dict):
                val = dumps(val)
            print(f"{key}: {val}")
    elif fmt == "csv":
        flat = {k: (dumps(v) if isinstance(v, (dict, list)) else v) for k, v in obj.items()}
        print(",".join(flat))
        print(",".join(str(v) for v in flat.values()))
    else:
        print(dumps(obj))


def cmd_params(args):
    _emit(make_params(args.s).to_dict(), args.format)


def cmd_semigroup(args):
    gens = args.gens or make_params(args.s).semigroup_generators
    H = NumericalSemigroup.from_generators(gens)
    if args.format == "text":
        for g in H.gaps:
            print(g)
    else:
        _emit(H.to_dict(), args.format)


def _table(args) -> TauTable:
    return TauTable(make_params(args.s))


def cmd_tau(args):
    tt = _table(args)
    _emit({"i": args.i, "tau": tt.tau(args.i), "decomposition": tt.decompose(args.i).to_dict()},
          args.format)


def cmd_tau_inv(args):
    tt = _table(args)
    i = tt.tau_inv(args.j)
    _emit({"j": args.j, "tau_inv": i, "decomposition": tt.decompose(i).to_dict()}, args.format)


def cmd_member(args):
    tt = _table(args)
    _emit({"i": args.i, "j": args.j, "member": in_semigroup(tt, args.i, args.j)}, args.format)


def cmd_dim(args):
    tt = _table(args)
    _emit({"a": args.a, "b": args.b, "rr_dimension": rr_dim(tt, args.a, args.b)}, args.format)


def cmd_nu(args):
    tt = _table(args)
    _emit({"a": args.a, "b": args.b, "nu_p": nu_p(tt, args.a, args.b),
           "nu_pinf": nu_pinf(tt, args.a, args.b)}, args.format)


def cmd_bound(args):
    tt = _table(args)
    horizon = args.horizon
    if horizon is not None:
        full = default_horizon(tt.params, args.a, args.b)
        if horizon > full:
            logging.getLogger(__name__).info("horizon %d exceeds %d; using %d", horizon, full, full)
            horizon = full
    _emit(bound_report(tt, args.a, args.b, horizon).to_dict(), args.format)


def cmd_onepoint(args):
    tt = _table(args)
    b_prime, d1 = best_one_point(tt, args.k)
    _emit({"k": args.k, "b_prime": b_prime, "d1": d1}, args.format)


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("SKAB_JOBS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"SKAB_JOBS must be an integer, got {env!r}")
    return 1


def cmd_table(args):
    fmt = args.format or "csv"
    if fmt == "text":
        raise DomainError("table output supports csv or json")
    cfg = SweepConfig(s=args.s, delta_threshold=args.min_delta, jobs=_jobs(args), fmt=fmt)
    export(sweep(cfg), fmt, args.out)


def cmd_figure(args):
    tt = _table(args)
    lines = ["i,j"] + [f"{i},{j}" for i, j in figure_points(tt, args.window)]
    text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write figure data to {args.out}: {exc.strerror}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, default=1, help="curve exponent, q0 = 2^s (default 1)")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        help="output format (default json; csv for table)")

    parser = argparse.ArgumentParser(
        prog="skab",
        description="Two-point semigroups and order bounds on the Skabelund curve.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("params", cmd_params, "derived curve parameters")

    p = add("semigroup", cmd_semigroup, "Weierstrass semigroup gaps and conductor")
    p.add_argument("--gens", type=int, nargs="+", help="custom generators instead of H(P_inf)")

    p = add("tau", cmd_tau, "evaluate tau(i)")
    p.add_argument("--i", type=int, required=True)
    p = add("tau-inv", cmd_tau_inv, "evaluate tau^-1(j)")
    p.add_argument("--j", type=int, required=True)

    p = add("member", cmd_member, "membership of (i, j) in H(P, P_inf)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    for name, func, help in (("dim", cmd_dim, "dim L(aP + bP_inf)"),
                             ("nu", cmd_nu, "nu values at P and P_inf")):
        p = add(name, func, help)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)

    p = add("bound", cmd_bound, "order bound report for aP + bP_inf")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--horizon", type=int, help="shorter sequence horizon (never longer)")

    p = add("onepoint", cmd_onepoint, "best one-point code of dual dimension k")
    p.add_argument("--k", type=int, required=True)

    p = add("table", cmd_table, "two-point vs one-point comparison table")
    p.add_argument("--min-delta", type=int, default=10)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--jobs", type=int, help="worker threads (default $SKAB_JOBS or 1)")

    p = add("figure", cmd_figure, "points of H(P, P_inf) near the origin as CSV")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--out", help="output file (default stdout)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None and args.command != "table":
        args.format = "json"
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        args.func(args)
    except (DomainError, OverflowError, LookupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
