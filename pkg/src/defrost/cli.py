"""Command-line frontend: ``defrost poly|table|verify|convert``.

Exit codes: 0 success, 1 verification failure or conversion mismatch,
2 usage or parameter error.  Rationals are always printed as ``p/q`` text.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__, stirling
from . import families as fam
from .errors import DefrostError
from .numeric import fmt_rational, parse_rational
from .verify import DEFAULT_GRID, FAIL, Grid, IdentityId, check_all, reports_to_json

DEFAULT_MAX_N = 12
HARD_CAP = 64
FAMILIES = ("dfe", "dfe-r", "dbern", "dgen", "cfe")


class UsageError(Exception):
    pass


def max_n_cap() -> int:
    raw = os.environ.get("DEFROST_MAX_N")
    if raw is None:
        return HARD_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"DEFROST_MAX_N is not an integer: {raw!r}")
    if cap < 0:
        raise UsageError("DEFROST_MAX_N must be nonnegative")
    return cap


def _rational(text):
    try:
        return parse_rational(text)
    except DefrostError as exc:
        raise argparse.ArgumentTypeError(str(exc))


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-3/5" through as a value, not an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="defrost", description="Degenerate Frobenius-Euler polynomials")
    p.add_argument("--version", action="version", version=f"defrost {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_flags(sp):
        sp.add_argument("--family", choices=FAMILIES, default="dfe")
        sp.add_argument("--u", type=_rational)
        sp.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(0))
        sp.add_argument("--order", type=int, default=1)
        sp.add_argument("--x", type=_rational)
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("poly", help="one family polynomial")
    family_flags(sp)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("table", help="family numbers or polynomials for n = 0..max-n")
    family_flags(sp)
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--coeffs", action="store_true",
                    help="emit coefficient lists instead of numbers")

    sp = sub.add_parser("verify", help="check identities over a parameter grid")
    sp.add_argument("--identity", default="all",
                    choices=["all"] + [i.value for i in IdentityId])
    sp.add_argument("--u", type=_rational, action="append")
    sp.add_argument("--lambda", dest="lam", type=_rational, action="append")
    sp.add_argument("--d", type=int, action="append")
    sp.add_argument("--order", type=int, action="append")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)

    sp = sub.add_parser("convert", help="Stirling transforms between h and H sequences")
    sp.add_argument("--direction", choices=("h2H", "H2h"), required=True)
    sp.add_argument("--u", type=_rational, required=True)
    sp.add_argument("--lambda", dest="lam", type=_rational, required=True)
    sp.add_argument("--order", type=int, default=1)
    sp.add_argument("--max-m", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--round-trip", action="store_true",
                    help="apply the inverse transform and compare with the input")
    return p


# helpers

def _check_bound(name, value):
    if value < 0:
        raise UsageError(f"{name} must be nonnegative")
    cap = max_n_cap()
    if value > cap:
        raise UsageError(f"{name} = {value} exceeds the cap {cap} (set DEFROST_MAX_N)")


def _check_order(r):
    if r < 1:
        raise UsageError(f"--order must be >= 1, got {r}")


def _need_u(args):
    if args.u is None:
        raise UsageError(f"--family {args.family} requires --u")
    if args.u == 1:
        raise UsageError("u = 1 is not admissible")
    return args.u


def family_seq(args, N) -> list:
    """Polynomials n = 0..N of the family named by the parsed flags."""
    _check_order(args.order)
    f = args.family
    if f != "dfe-r" and f != "cfe" and args.order != 1:
        raise UsageError("--order applies only to dfe-r and cfe")
    if f == "dfe":
        return fam.dfe_poly_seq(N, _need_u(args), args.lam)
    if f == "dfe-r":
        return fam.dfe_higher_poly_seq(N, args.order, _need_u(args), args.lam)
    if f == "cfe":
        return fam.classical_fe_higher_seq(N, args.order, _need_u(args))
    if f == "dbern":
        return fam.deg_bernoulli_poly_seq(N, args.lam)
    if f == "dgen":
        return fam.deg_genocchi_poly_seq(N, args.lam)
    raise UsageError(f"unknown family {f}")


def _metadata(args, truncation, **extra):
    meta = {
        "family": args.family,
        "lambda": fmt_rational(args.lam),
        "order": args.order,
        "tool": "defrost",
        "truncation_order": truncation,
        "version": __version__,
    }
    if args.family in ("dfe", "dfe-r", "cfe"):
        meta["u"] = fmt_rational(args.u)
    elif args.family == "dgen":
        meta["u"] = "-1"
    if args.family == "cfe":
        meta["lambda"] = "0"
    meta.update(extra)
    return meta


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# commands

def cmd_poly(args):
    _check_bound("--n", args.n)
    p = family_seq(args, args.n)[args.n]
    meta = _metadata(args, args.n, n=args.n)
    if args.x is not None:
        value = fmt_rational(p(args.x))
        payload = {"value": value, "x": fmt_rational(args.x)}
        header, rows = ["x", "value"], [[payload["x"], value]]
    else:
        coeffs = p.to_strings()
        payload = {"coefficients": coeffs}
        header, rows = ["power", "coefficient"], [[k, c] for k, c in enumerate(coeffs)]
    if args.format == "csv":
        return dump_csv(header, rows), 0
    return dump_json({"metadata": meta, "payload": payload}), 0


def cmd_table(args):
    _check_bound("--max-n", args.max_n)
    seq = family_seq(args, args.max_n)
    meta = _metadata(args, args.max_n, max_n=args.max_n)
    if args.coeffs:
        rows = [{"coefficients": p.to_strings(), "n": n} for n, p in enumerate(seq)]
        width = max(len(r["coefficients"]) for r in rows)
        header = ["n"] + [f"c{k}" for k in range(width)]
        csv_rows = [[r["n"]] + r["coefficients"] + [""] * (width - len(r["coefficients"]))
                    for r in rows]
    else:
        x = Fraction(0) if args.x is None else args.x
        meta["x"] = fmt_rational(x)
        rows = [{"n": n, "value": fmt_rational(p(x))} for n, p in enumerate(seq)]
        header = ["n", "value"]
        csv_rows = [[r["n"], r["value"]] for r in rows]
    if args.format == "csv":
        return dump_csv(header, csv_rows), 0
    return dump_json({"metadata": meta, "payload": {"rows": rows}}), 0


def cmd_verify(args):
    _check_bound("--max-n", args.max_n)
    for r in args.order or ():
        _check_order(r)
    for d in args.d or ():
        if d < 1:
            raise UsageError(f"--d must be >= 1, got {d}")
    grid = Grid(
        us=tuple(args.u) if args.u else DEFAULT_GRID.us,
        lambdas=tuple(args.lam) if args.lam else DEFAULT_GRID.lambdas,
        orders=tuple(args.order) if args.order else DEFAULT_GRID.orders,
        ds=tuple(args.d) if args.d else DEFAULT_GRID.ds,
    )
    identities = None if args.identity == "all" else [args.identity]
    reports = check_all(grid, args.max_n, identities)
    meta = {
        "d": list(grid.ds),
        "identity": args.identity,
        "lambda": [fmt_rational(v) for v in grid.lambdas],
        "max_n": args.max_n,
        "order": list(grid.orders),
        "tool": "defrost",
        "truncation_order": args.max_n,
        "u": [fmt_rational(v) for v in grid.us],
        "version": __version__,
    }
    code = 1 if any(r.status == FAIL for r in reports) else 0
    return dump_json({"metadata": meta, "payload": reports_to_json(reports)}), code


def cmd_convert(args):
    _check_bound("--max-m", args.max_m)
    _check_order(args.order)
    if args.u == 1:
        raise UsageError("u = 1 is not admissible")
    M, r, u, lam = args.max_m, args.order, args.u, args.lam
    degenerate = fam.dfe_higher_poly_seq(M, r, u, lam)
    classical = fam.classical_fe_higher_seq(M, r, u)
    if args.direction == "h2H":
        source, forward, backward, target = degenerate, stirling.h_to_H, stirling.H_to_h, classical
    else:
        source, forward, backward, target = classical, stirling.H_to_h, stirling.h_to_H, degenerate
    out = forward(source, lam)
    compare_to = target
    if args.round_trip:
        out = backward(out, lam)
        compare_to = source
    rows = [
        {"coefficients": p.to_strings(), "m": m, "match": p == compare_to[m]}
        for m, p in enumerate(out)
    ]
    all_match = all(r["match"] for r in rows)
    meta = {
        "direction": args.direction,
        "lambda": fmt_rational(lam),
        "max_m": M,
        "order": r,
        "round_trip": args.round_trip,
        "tool": "defrost",
        "truncation_order": M,
        "u": fmt_rational(u),
        "version": __version__,
    }
    doc = {"metadata": meta, "payload": {"all_match": all_match, "rows": rows}}
    return dump_json(doc), 0 if all_match else 1


COMMANDS = {"poly": cmd_poly, "table": cmd_table, "verify": cmd_verify, "convert": cmd_convert}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, DefrostError) as exc:
        print(f"defrost {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
