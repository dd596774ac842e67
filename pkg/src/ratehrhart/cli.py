"""Command line interface.

    ratehrhart {count|indices|ehrhart|coeffs|verify|sample} FILE [flags]

Exit status: 0 ok, 1 verification failure, 2 parse error, 3 domain error.
All rationals are printed exactly as ``p/q``.  ``TOOL_THREADS`` is accepted
as a cap on parallelism; commands currently run on a single thread.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import FREE, format_rational, parse_rational
from .counting import count
from .ehrhart import compute_ehrhart
from .errors import DomainError, ParseError, UnsupportedKind, ValidationFailed
from .fileformat import load_polytope
from .polytope import (GENERAL, denominator, integer_i_index,
                       rational_denominator, rational_i_index)
from .rational import compute_piecewise, eval_piecewise, eval_Qi, format_poly
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


def _rational_arg(name):
    def conv(text):
        try:
            return parse_rational(text)
        except ParseError as exc:
            raise argparse.ArgumentTypeError(f"{name}: {exc}") from None
    return conv


def _threads():
    raw = os.environ.get("TOOL_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"TOOL_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"TOOL_THREADS must be a positive integer, got {raw!r}")
    return n


def _scale_str(s):
    return str(s) if s is FREE else format_rational(s)


def cmd_count(args, out):
    P = load_polytope(args.file)
    print(count(P, args.r), file=out)
    return EXIT_OK


def cmd_indices(args, out):
    P = load_polytope(args.file)
    print(f"d {denominator(P)}", file=out)
    print(f"q {format_rational(rational_denominator(P))}", file=out)
    if P.kind == GENERAL:
        print("indices unsupported", file=out)
        print("warning: i-indices need a polygon or simplex", file=sys.stderr)
        return EXIT_OK
    print("i d_i rd_i", file=out)
    for i in range(P.dim + 1):
        print(f"{i} {_scale_str(integer_i_index(P, i))} {_scale_str(rational_i_index(P, i))}",
              file=out)
    return EXIT_OK


def cmd_ehrhart(args, out):
    P = load_polytope(args.file)
    qp = compute_ehrhart(P)
    print(f"period {qp.period}", file=out)
    for j in qp.residues():
        print(f"k = {j} mod {qp.period}: {format_poly(qp.coeffs[j], 'k')}", file=out)
    return EXIT_OK


def cmd_coeffs(args, out):
    P = load_polytope(args.file)
    pw = compute_piecewise(P)
    print(f"period {format_rational(pw.period)}", file=out)
    print("breakpoints " + " ".join(format_rational(b) for b in pw.breakpoints), file=out)
    for (lo, hi), pcs in zip(pw.intervals, pw.pieces):
        print(f"interval ({format_rational(lo)}, {format_rational(hi)})", file=out)
        for j in reversed(range(pw.dimension + 1)):
            print(f"  Q{j} = {format_poly(pcs[j])}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    P = load_polytope(args.file)
    suites = SUITES if args.all or not any(getattr(args, s) for s in SUITES) else \
        tuple(s for s in SUITES if getattr(args, s))
    results = run_suites(P, suites, samples=args.samples, seed=args.seed,
                         random_polygons=args.random_polygons)
    for res in results:
        if args.format == "json-lines":
            print(json.dumps({"check": res.name, "status": res.status, "detail": res.detail}),
                  file=out)
        else:
            print(res.line(), file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def sample_rows(P, start, stop, step):
    """Rows ``(r, count, Q_0..Q_n)`` for r = start, start+step, ... <= stop."""
    if step <= 0:
        raise DomainError("step must be positive")
    if start < 0 or stop < start:
        raise DomainError("need 0 <= from <= to")
    if start == stop:
        return []
    n = P.ambient_dim
    pw = compute_piecewise(P)
    bps = set(pw.breakpoints)
    rows = []
    r = start
    while r <= stop:
        reduced = r - (r // pw.period) * pw.period
        if reduced in bps:
            qs = [eval_Qi(P, i, r) for i in range(n + 1)]
        else:
            qs = [eval_piecewise(pw, i, r) for i in range(n + 1)]
        rows.append([r, Fraction(count(P, r))] + qs)
        r += step
    return rows


def cmd_sample(args, out):
    P = load_polytope(args.file)
    rows = sample_rows(P, args.start, args.stop, args.step)
    header = ["r", "count"] + [f"Q{i}" for i in range(P.ambient_dim + 1)]
    lines = []
    if args.format == "json-lines":
        lines = [json.dumps(dict(zip(header, (format_rational(x) for x in row)))) for row in rows]
    else:
        lines = [",".join(header)] + [",".join(format_rational(x) for x in row) for row in rows]
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="ratehrhart",
                                     description="Lattice points in rational dilates of rational polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count integer points in rP")
    p.add_argument("file")
    p.add_argument("-r", "--r", type=_rational_arg("-r"), required=True,
                   help="dilation factor, e.g. 2/3")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("indices", help="d(P), q(P), d_i(P), rd_i(P)")
    p.add_argument("file")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("ehrhart", help="classical Ehrhart quasi-polynomial")
    p.add_argument("file")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("coeffs", help="breakpoints and polynomial pieces of every Q_i")
    p.add_argument("file")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("file")
    for s in SUITES:
        p.add_argument(f"--{s}", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-polygons", type=int, default=0,
                   help="extra seeded random polygons for --bound2d")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="CSV of count and Q_i over a range of r")
    p.add_argument("file")
    p.add_argument("--from", dest="start", type=_rational_arg("--from"), default=Fraction(0))
    p.add_argument("--to", dest="stop", type=_rational_arg("--to"), required=True)
    p.add_argument("--step", type=_rational_arg("--step"), required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json-lines"), default="csv")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        _threads()
        if getattr(args, "samples", 1) < 1:
            raise DomainError("--samples must be positive")
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, UnsupportedKind) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationFailed as exc:
        print(f"FAIL reconstruction: {exc}", file=out)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
