#!/usr/bin/env python3
"""Benchmark the compiled window kernels against the pure-Python twins.

Workloads mirror the package's hot paths: composing random pairs, powering
every element of the rank-6 signed group (the brute-force oracle loop), and
cycle-typing the same elements.  Run:

    python benchmarks/bench_kernels.py [--n 6] [--repeat 3]
"""

from __future__ import annotations

import argparse
import importlib
import itertools
import random
import time


def load_backends():
    backends = {}
    backends["python"] = importlib.import_module("hyperlie._windows_py")
    try:
        backends["c"] = importlib.import_module("hyperlie._windows_cy")
    except ImportError:
        print("compiled backend not built; benchmarking pure Python only")
    return backends


def windows_of_rank(n):
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            out.append(tuple(-p if (mask >> i) & 1 else p for i, p in enumerate(perm)))
    return out


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = load_backends()
    elements = windows_of_rank(args.n)
    rng = random.Random(20250811)
    pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(100_000)]
    print(f"rank {args.n}: {len(elements)} elements, {len(pairs)} compose pairs")

    results: dict[str, dict[str, float]] = {}
    for name, mod in backends.items():
        compose, power, cycle_type = mod.compose, mod.power, mod.cycle_type
        results[name] = {
            "compose": bench(lambda: [compose(a, b) for a, b in pairs], args.repeat),
            "power k=12": bench(lambda: [power(w, 12) for w in elements], args.repeat),
            "cycle_type": bench(lambda: [cycle_type(w) for w in elements], args.repeat),
        }

    workloads = list(next(iter(results.values())))
    width = max(len(w) for w in workloads)
    header = f"{'workload'.ljust(width)}  " + "  ".join(f"{name:>10}" for name in results)
    if len(results) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for w in workloads:
        line = f"{w.ljust(width)}  " + "  ".join(f"{results[name][w]:10.4f}" for name in results)
        if len(results) == 2:
            py, c = results["python"][w], results["c"][w]
            line += f"  {py / c:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
