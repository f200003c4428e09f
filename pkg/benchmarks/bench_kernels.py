#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy/python fallbacks.

Runs both implementations of each flow kernel on identical inputs and
prints wall-clock medians plus the speedup. JIT compilation happens in a
warm-up call that is excluded from timing. Works regardless of the
STATICGEO_NUMBA setting; numba rows are skipped when numba is missing.

Usage: python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import math
import statistics
import time

import numpy as np

from staticgeo import _kernels as K
from staticgeo._accel import HAVE_NUMBA


def time_call(fn, args_factory, repeats):
    samples = []
    for _ in range(repeats):
        args = args_factory()
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def ode_args():
    n, r0, H0 = 3, 4.0, 0.3535533906
    ts = np.empty(200_000)
    us = np.empty(200_000)
    return (
        n / (2.0 * (n - 1.0)),
        0.5 * (n - 1.0) * (n - 2.0) / r0**2,
        2.0 / (n - 1.0),
        1.0 / H0,
        20.0,
        1e-12,
        1e-13,
        1e-4,
        1e-8,
        1e8,
        200_000,
        ts,
        us,
    )


def pde_args(N, t_target=0.5):
    n, r0 = 3, 4.0
    theta = np.linspace(0.0, math.pi, N + 1)
    h = math.pi / N
    u = 2.8284271247 * (1.0 + 0.01 * np.cos(theta) ** 2)
    cot = np.zeros_like(theta)
    cot[1:-1] = np.cos(theta[1:-1]) / np.sin(theta[1:-1])
    rsig_half = np.full_like(theta, 0.5 * (n - 1) * (n - 2) / r0**2)
    scratch = [np.empty_like(u) for _ in range(5)]
    return (
        u, 0.0, t_target, 1.0 / h**2, 0.5 / h, float(n - 2), cot,
        1.0 / r0**2, n / (2.0 * (n - 1.0)), 0.0, rsig_half,
        (n - 1.0) * 2.0 / h**2, 2.0 / (n - 1.0),
        0.2 * h * h * r0**2, 0.05, 1e-8, 1e8, *scratch,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rows = []

    t_py = time_call(K.ode_integrate_python, ode_args, args.repeats)
    if HAVE_NUMBA:
        K.ode_integrate_numba(*ode_args())  # compile
        t_nb = time_call(K.ode_integrate_numba, ode_args, args.repeats)
    else:
        t_nb = None
    rows.append(("ode tol=1e-12 t=20", t_py, t_nb))

    for N in (128, 512):
        t_np = time_call(K.pde_advance_numpy, lambda: pde_args(N), args.repeats)
        if HAVE_NUMBA:
            K.pde_advance_numba(*pde_args(N))  # compile
            t_nb = time_call(K.pde_advance_numba, lambda: pde_args(N),
                             args.repeats)
        else:
            t_nb = None
        rows.append((f"pde N={N} t=0.5", t_np, t_nb))

    print(f"{'kernel':24s} {'fallback [s]':>14s} {'numba [s]':>12s} {'speedup':>9s}")
    for name, t_fb, t_nb in rows:
        if t_nb is None:
            print(f"{name:24s} {t_fb:14.4f} {'n/a':>12s} {'n/a':>9s}")
        else:
            print(f"{name:24s} {t_fb:14.4f} {t_nb:12.4f} {t_fb / t_nb:8.1f}x")
    if not HAVE_NUMBA:
        print("numba not installed; only the fallback path was timed")


if __name__ == "__main__":
    main()
