"""Command-line entry point.

Subcommands:
  coxeter dump   element / class / parabolic tables for one group
  lattice        flats of the reflection arrangement
  measure        the shuffling measure as a descent-set table
  sample         physical shuffle sampler, with optional exact comparison
  orbits         orbit representatives with factorizations and class labels
  bijection      Gessel-Reutenauer tools (gr, refine)
  verify         run a verification suite; exit 0 iff it passes

Exit codes: 0 pass, 1 fail, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional

from ._accel import BACKEND
from .report import Report, exact_str
from .suites import DEFAULT_PARAMS, SUITES, run_suite


def _write_out(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_x(s: str) -> Fraction:
    return Fraction(s)


def cmd_coxeter(args) -> int:
    from .tables import emit_table

    text = emit_table(args.what, {"type": args.type}, args.format)
    _write_out(text, args.out)
    return 0


def cmd_lattice(args) -> int:
    from .tables import emit_table

    text = emit_table("lattice", {"type": args.type}, args.format)
    _write_out(text, args.emit)
    return 0


def cmd_measure(args) -> int:
    from .tables import emit_table

    xs = [_parse_x(part) for part in args.x.split(",")]
    text = emit_table(
        "measure",
        {"type": args.type, "x": xs if len(xs) > 1 else xs[0], "method": args.method},
        args.format,
    )
    _write_out(text, args.out)
    return 0


def cmd_sample(args) -> int:
    import random

    from .group import get_group
    from .measures import h_measure
    from .shuffling import empirical_law, sample_shuffle, tv_distance

    if args.compare == "exact":
        emp = empirical_law(args.model, args.n, args.x, args.count, args.seed)
        t = f"A{args.n - 1}" if args.model == "gsr_a" else f"B{args.n}"
        g = get_group(t)
        exact = {g.one_line[i]: v for i, v in enumerate(h_measure(g, args.x, "closed_form").dense())}
        tv = tv_distance(emp, exact)
        out = {
            "model": args.model,
            "n": args.n,
            "x": args.x,
            "count": args.count,
            "seed": args.seed,
            "tv_exact": exact_str(tv),
            "tv_float": float(tv),
        }
        _write_out(json.dumps(out, indent=2), args.out)
    else:
        rng = random.Random(args.seed)
        samples = [
            list(sample_shuffle(args.model, args.n, args.x, rng=rng))
            for _ in range(args.count)
        ]
        _write_out(json.dumps(samples), args.out)
    return 0


def cmd_orbits(args) -> int:
    from .tables import emit_table

    text = emit_table(
        "orbits", {"family": args.family, "n": args.n, "q": args.q}, args.format
    )
    _write_out(text, args.emit)
    return 0


def cmd_bijection(args) -> int:
    from .necklaces import cycles_string, gessel_reutenauer, refine_phi_A

    if args.bijection_cmd == "gr":
        necklaces = [tuple(int(c) for c in part) for part in args.necklaces.split(",")]
        _, cycles = gessel_reutenauer(necklaces)
        _write_out(cycles_string(cycles), args.out)
        return 0
    # refine
    from .gfpoly import FqContext, FqPoly, monic_polys

    ctx = FqContext.get(args.p)
    if args.census:
        counts = {}
        for f in monic_polys(ctx, args.n):
            w, _ = refine_phi_A(f, args.mode)
            key = "".join(map(str, w))
            counts[key] = counts.get(key, 0) + 1
        _write_out(json.dumps(dict(sorted(counts.items())), indent=2), args.out)
        return 0
    if not args.poly:
        print("need --poly coefficients or --census", file=sys.stderr)
        return 2
    coeffs = [int(c) for c in args.poly.split(",")]
    f = FqPoly.from_ints(ctx, coeffs)
    w, cycles = refine_phi_A(f, args.mode)
    _write_out(json.dumps({"poly": str(f), "permutation": list(w), "cycles": cycles}), args.out)
    return 0


def _single_point_params(name: str, params: dict) -> Optional[List[dict]]:
    """Split a suite's parameter grid into single points for --jobs."""
    if "grid" in params and isinstance(params["grid"], list) and len(params["grid"]) > 1:
        return [{**params, "grid": [entry]} for entry in params["grid"]]
    if "types" in params and isinstance(params["types"], list) and len(params["types"]) > 1:
        return [{**params, "types": [t]} for t in params["types"]]
    return None


def cmd_verify(args) -> int:
    name = args.suite
    if name == "problem1":  # dispatch on --family
        if args.family not in ("A", "B"):
            print("verify problem1 needs --family A or --family B", file=sys.stderr)
            return 2
        name = f"problem1_{args.family}"
    if name not in SUITES:
        print(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
        return 2
    overrides = {}
    if args.type:
        overrides["types"] = args.type
    if args.n is not None and args.q is not None:
        overrides["grid"] = [(args.n, args.q)]
    elif args.n is not None or args.q is not None:
        print("--n and --q must be given together", file=sys.stderr)
        return 2
    if args.x is not None:
        xs = [_parse_x(v) for v in args.x]
        if name in ("triple_agreement", "longshort", "walk_oracle"):
            overrides["xs"] = xs
        else:
            overrides["x"] = xs[0]
    if args.seed is not None:
        overrides["seed"] = args.seed
    merged = dict(DEFAULT_PARAMS.get(name, {}))
    merged.update(overrides)

    if args.jobs > 1:
        split = _single_point_params(name, merged)
    else:
        split = None
    if split:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            partials = list(pool.map(lambda p: run_suite(name, p), split))
        report = Report(name, merged)
        for part in partials:  # deterministic merge: grid order
            report.checks.extend(part.checks)
        report.finish()
    else:
        report = run_suite(name, merged)

    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(report.summary_line())
    else:
        print(text)
        print(report.summary_line(), file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxshuffle",
        description="Exact shuffling measures on finite Coxeter groups, orbit models "
        "over finite fields, and exhaustive verification suites "
        f"(kernel backend: {BACKEND}).",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("coxeter", help="group tables")
    csub = p.add_subparsers(dest="coxeter_cmd", required=True)
    pd = csub.add_parser("dump", help="dump element/class/parabolic tables")
    pd.add_argument("--type", required=True, help="A3, B2, D4, G2, I2(5), H3, H4")
    pd.add_argument("--what", choices=["elements", "classes", "parabolics"], required=True)
    pd.add_argument("--format", choices=["csv", "json"], default="csv")
    pd.add_argument("--out")
    pd.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("lattice", help="arrangement flats")
    p.add_argument("--type", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--emit", help="output file (default stdout)")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("measure", help="shuffling measure table")
    p.add_argument("--type", required=True)
    p.add_argument("--x", required=True, help="nonzero rational, e.g. 2 or 1/2")
    p.add_argument("--method", choices=["definition", "os_sign", "closed_form"],
                   default="definition")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sample", help="physical shuffle sampler")
    p.add_argument("--model", choices=["gsr_a", "typeB_flip"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--compare", choices=["exact"], default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("orbits", help="orbit representatives")
    p.add_argument("--family", choices=["A", "B"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("bijection", help="necklace bijections")
    bsub = p.add_subparsers(dest="bijection_cmd", required=True)
    pg = bsub.add_parser("gr", help="Gessel-Reutenauer on a necklace multiset")
    pg.add_argument("--necklaces", required=True, help='e.g. "12,12,2,23,23233"')
    pg.add_argument("--out")
    pg.set_defaults(func=cmd_bijection)
    pr = bsub.add_parser("refine", help="polynomial to permutation")
    pr.add_argument("--family", choices=["A"], default="A")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--p", type=int, required=True)
    pr.add_argument("--mode", choices=["golomb", "normal_basis"], default="normal_basis")
    pr.add_argument("--census", action="store_true", help="per-permutation counts over all monics")
    pr.add_argument("--poly", help="comma-separated coefficients, low to high")
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=", ".join(sorted(SUITES)) + ", problem1")
    p.add_argument("--type", action="append", help="override the type grid (repeatable)")
    p.add_argument("--family", choices=["A", "B"], help="for the problem1 alias")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--x", action="append", help="override x (repeatable)")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report to a file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
