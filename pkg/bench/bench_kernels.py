#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

The four kernels carry the hot inner loops of the H3/H4 pipelines:
span tests for arrangement flats, Moebius recursion over the flat poset,
coset minimal representatives, and conjugacy-orbit closure.  Example:

    python bench/bench_kernels.py --type H4
"""

import argparse
import time

from coxshuffle import _kernels_py
from coxshuffle.group import get_group
from coxshuffle.lattice import build_lattice

try:
    from coxshuffle import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(type_name: str):
    g = get_group(type_name)
    rs = g.root_system
    lat = build_lattice(rs)
    pairs = rs.root_pairs
    edges = [f.basis for f in lat.flats if f.rank >= 1]
    ks = [sorted(i for i in range(g.rank) if m >> i & 1) for m in range(1 << g.rank)]

    workloads = {
        "span_mask (all flat bases)": lambda impl: [
            impl.span_mask(pairs, b) for b in edges
        ],
        "moebius_from_bottom (from V)": lambda impl: impl.moebius_from_bottom(
            lat.masks, lat.ranks, lat.bottom_id()
        ),
        "coset_minreps (all K)": lambda impl: [
            impl.coset_minreps(g.rmult, g.length, K, g.by_length) for K in ks
        ],
        "conjugacy_closure": lambda impl: impl.conjugacy_closure(
            g.rmult, g.lmult, g.rank
        ),
    }

    print(f"{type_name}: |W| = {g.size}, hyperplanes = {rs.n_positive}, flats = {len(lat)}")
    header = f"{'kernel':34s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name, work in workloads.items():
        t_pure, r_pure = timed(lambda: work(_kernels_py))
        if compiled is None:
            print(f"{name:34s} {t_pure:10.4f} {'n/a':>13s} {'n/a':>9s}")
            continue
        t_comp, r_comp = timed(lambda: work(compiled))
        same = _normalize(r_pure) == _normalize(r_comp)
        speed = t_pure / t_comp if t_comp > 0 else float("inf")
        flag = "" if same else "  RESULTS DIFFER"
        print(f"{name:34s} {t_pure:10.4f} {t_comp:13.4f} {speed:8.1f}x{flag}")
    if compiled is None:
        print("(compiled extension not built; showing pure-Python timings only)")


def _normalize(x):
    if isinstance(x, tuple):
        return tuple(_normalize(v) for v in x)
    if isinstance(x, list):
        return [_normalize(v) for v in x]
    return x


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="H3", help="group type (default H3)")
    args = parser.parse_args()
    bench(args.type)


if __name__ == "__main__":
    main()
