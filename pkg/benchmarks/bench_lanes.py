"""Benchmark the compiled kernel lane against the pure-Python lane.

Both lanes are run on identical inputs and their outputs are compared
before any timing is reported, so a lane that drifts is caught here too.

Usage:
    python3 benchmarks/bench_lanes.py [--samples N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sgq import parse_group
from sgq._kernels import pure
from sgq.realize.realization import realization_for

try:
    from sgq._kernels import _fast
except ImportError:
    _fast = None

CENSUS_GROUPS = ("A8", "L3(4)", "M11", "M12")
SAMPLE_GROUPS = ("M11", "S4(3)", "S6(3)")


def best_of(repeat: int, fn, *args) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def fmt(seconds: float) -> str:
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.3f} s "


def row(label: str, t_pure: float, t_fast: float | None) -> None:
    if t_fast is None:
        print(f"{label:34s} {fmt(t_pure)}        (pure only)")
    else:
        print(f"{label:34s} {fmt(t_pure)} {fmt(t_fast)} {t_pure / t_fast:7.1f}x")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=20000,
                        help="product-replacement draws per group")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement, best is kept")
    args = parser.parse_args()

    if _fast is None:
        print("compiled lane not built; timing the pure lane alone")
    header = f"{'workload':34s} {'pure':>11s} {'compiled':>11s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))

    for token in CENSUS_GROUPS:
        gens = realization_for(parse_group(token)).generator_matrix()
        t_pure, got_pure = best_of(args.repeat, pure.census_counts, gens, 1 << 21)
        t_fast = None
        if _fast is not None:
            t_fast, got_fast = best_of(args.repeat, _fast.census_counts, gens, 1 << 21)
            assert got_fast == got_pure, f"lane mismatch on census {token}"
        row(f"census {token}", t_pure, t_fast)

    for token in SAMPLE_GROUPS:
        gens = realization_for(parse_group(token)).generator_matrix()
        t_pure, got_pure = best_of(
            args.repeat, pure.pr_order_histogram, gens, args.samples, 1, 10, 100
        )
        t_fast = None
        if _fast is not None:
            t_fast, got_fast = best_of(
                args.repeat, _fast.pr_order_histogram, gens, args.samples, 1, 10, 100
            )
            assert got_fast == got_pure, f"lane mismatch on sampling {token}"
        row(f"sample {token} x{args.samples}", t_pure, t_fast)

    rng = np.random.default_rng(7)
    perms = [rng.permutation(1093).astype(np.uint16) for _ in range(200)]

    def orders(impl):
        return [impl.perm_order(p) for p in perms]

    t_pure, got_pure = best_of(args.repeat, orders, pure)
    t_fast = None
    if _fast is not None:
        t_fast, got_fast = best_of(args.repeat, orders, _fast)
        assert got_fast == got_pure, "lane mismatch on perm_order"
    row("perm_order degree-1093 x200", t_pure, t_fast)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
