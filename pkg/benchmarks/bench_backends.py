#!/usr/bin/env python3
"""Compare the compiled kernels against their pure-numpy twins end to end.

Each backend runs in a fresh interpreter (the choice is fixed at import
time via THCOVER_BACKEND), covering union-of-two-threshold instances near
the requested edge counts and reporting the best of --repeats runs.

Usage:
    python3 benchmarks/bench_backends.py [--sizes 500,1000,2000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time


def closest_instance(target: int, seed: int):
    from thcover.oracle import GenSpec, generate

    # p=0.5 unions land around 0.71 * C(n, 2) edges
    n = max(6, round((2 * target / 0.71) ** 0.5))
    best = None
    for g in generate(GenSpec("union-of-two-threshold", n, p=0.5, seed=seed, samples=20)):
        if best is None or abs(g.m - target) < abs(best.m - target):
            best = g
    return best


def run_child(sizes: list[int], repeats: int, seed: int) -> None:
    from thcover import cover2
    from thcover.backend import backend_name

    for target in sizes:
        g = closest_instance(target, seed)
        cover2(g)  # warm-up: jit compilation and caches
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            res = cover2(g)
            best = min(best, time.perf_counter() - t0)
        print(f"ROW {backend_name} {g.m} {best * 1000:.3f} {int(res.found)}", flush=True)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="500,1000,2000", help="target edge counts")
    parser.add_argument("--repeats", type=int, default=5, help="timed runs per instance")
    parser.add_argument("--seed", type=int, default=11)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if args.child:
        run_child(sizes, args.repeats, args.seed)
        return 0

    rows: dict[str, dict[int, float]] = {}
    for backend in ("numba", "numpy"):
        env = os.environ.copy()
        env["THCOVER_BACKEND"] = backend
        cmd = [
            sys.executable, os.path.abspath(__file__),
            "--child", "--sizes", args.sizes,
            "--repeats", str(args.repeats), "--seed", str(args.seed),
        ]
        out = subprocess.run(cmd, env=env, capture_output=True, text=True)
        if out.returncode != 0:
            sys.stderr.write(out.stderr)
            return out.returncode
        for line in out.stdout.splitlines():
            _, name, m, ms, _ = line.split()
            rows.setdefault(name, {})[int(m)] = float(ms)

    print(f"{'m':>8} {'numba ms':>12} {'numpy ms':>12} {'numpy/numba':>14}")
    for m in sorted(rows["numba"]):
        tb, tp = rows["numba"][m], rows["numpy"][m]
        print(f"{m:>8} {tb:>12.2f} {tp:>12.2f} {tp / tb:>13.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
