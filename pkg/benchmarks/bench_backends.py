#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths on identical inputs: raw Ryser permanents,
full graph-polynomial extraction, and the canonical-extension step that
drives enumeration. Results are wall-clock medians of --repeat runs.

Usage: python3 benchmarks/bench_backends.py [--n 7] [--repeat 3]
"""

import argparse
import random
import statistics
import time

from coperm.backend import available_backends
from coperm.enumerate import enumerate_graphs


def _random_matrix(rng, k):
    return [rng.randint(0, 1) for _ in range(k * k)]


def bench(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=7,
                    help="vertex count for the graph-based benchmarks")
    ap.add_argument("--k", type=int, default=10, help="matrix size for raw permanents")
    ap.add_argument("--mats", type=int, default=200, help="number of random matrices")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; nothing to compare")
        return

    rng = random.Random(1)
    mats = [_random_matrix(rng, args.k) for _ in range(args.mats)]
    graphs = [list(g.rows) for g in enumerate_graphs(args.n)]
    parents = [list(g.rows) for g in enumerate_graphs(args.n - 1)]

    cases = {
        f"permanent, {args.mats} random 0/1 {args.k}x{args.k}":
            lambda impl: [impl.permanent(m, args.k) for m in mats],
        f"perm_poly coefficients, all {len(graphs)} graphs n={args.n}":
            lambda impl: [impl.graph_poly(r, args.n, "perm") for r in graphs],
        f"char_poly coefficients, all {len(graphs)} graphs n={args.n}":
            lambda impl: [impl.graph_poly(r, args.n, "char") for r in graphs],
        f"canonical children, all {len(parents)} parents at n={args.n - 1}":
            lambda impl: [impl.canonical_children(r, args.n - 1, 0, args.n - 1)
                          for r in parents],
    }

    width = max(len(name) for name in cases)
    print(f"{'case'.ljust(width)}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name, runner in cases.items():
        out = {}
        for bname, impl in backends.items():
            got = runner(impl)  # warm + correctness cross-check
            out[bname] = (bench(lambda: runner(impl), args.repeat), got)
        assert out["compiled"][1] == out["pure-python"][1], f"backends disagree: {name}"
        fast, slow = out["compiled"][0], out["pure-python"][0]
        print(f"{name.ljust(width)}  {fast * 1e3:9.1f}ms  {slow * 1e3:9.1f}ms  "
              f"{slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
