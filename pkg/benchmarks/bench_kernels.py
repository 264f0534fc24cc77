#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs each hot kernel on a representative workload in both modes and prints
median timings plus the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeats 9]

The library itself selects the kernel set via HBQ_KERNELS=auto|numba|numpy;
this script imports both implementations directly, so the env flag does not
matter here (numba must be importable for the comparison to run).
"""

from __future__ import annotations

import argparse
import math
import statistics
import time

import numpy as np

from hbq import _kernels

CHI = np.array([0j, 1 + 0j, 0j, -1 + 0j], dtype=np.complex128)  # mod 4
LOGQ_HALF = math.log(0.5)
LOGQ_NEAR1 = math.log(1.0 - 1e-5)

WORKLOADS = [
    ("qzeta_partial_sum (q near 1, 2e6 terms)",
     "qzeta_partial_sum",
     (LOGQ_NEAR1, 2.0 + 0j, 0.0, np.ones(1, dtype=np.complex128), True, 1,
      2_000_000)),
    ("qzeta_partial_sum (chi mod 4, 1e6 terms)",
     "qzeta_partial_sum",
     (LOGQ_NEAR1, 2.0 + 0j, 0.0, CHI, True, 1, 1_000_000)),
    ("damped_pair_sum (M=2500, N=45, s=2)",
     "damped_pair_sum",
     (2.0 + 0j, 0.025, LOGQ_HALF, True, np.ones(1, dtype=np.complex128),
      True, 2500, 45)),
    ("gen_series_sum (t sweep surrogate)",
     "gen_series_sum",
     (1e-6, LOGQ_HALF, True, np.ones(1, dtype=np.complex128), 4000, 1e-13)),
]


def _time(fn, args, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=9)
    opts = ap.parse_args()

    if not hasattr(_kernels, "qzeta_partial_sum_numba"):
        print("numba not importable; nothing to compare "
              "(pure-numpy kernels are the active set)")
        return 0

    print(f"{'workload':52s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, name, args in WORKLOADS:
        f_np = getattr(_kernels, name + "_numpy")
        f_nb = getattr(_kernels, name + "_numba")
        f_nb(*args)  # warm the JIT outside the timed region
        t_np = _time(f_np, args, opts.repeats)
        t_nb = _time(f_nb, args, opts.repeats)
        print(f"{label:52s} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms "
              f"{t_np / t_nb:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
