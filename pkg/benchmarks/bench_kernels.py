#!/usr/bin/env python3
"""Benchmark the compiled fast-path kernels against the numpy fallback.

Times the three hot operations of the search module: single-matrix
eigenvalues, batched sampling statistics, and the coordinate-descent inner
loop.  Run after an editable install:

    python benchmarks/bench_kernels.py [--q 5] [--dim 9] [--repeat 5]
"""

import argparse
import time

import numpy as np

from minertia import _kernels_py
from minertia import kernels


def _random_basis(rng, dim, q):
    mats = []
    for _ in range(dim):
        a = rng.standard_normal((q, q)) + 1j * rng.standard_normal((q, q))
        mats.append((a + a.conj().T) / 2)
    return np.stack(mats)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=5)
    ap.add_argument("--dim", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--eig-calls", type=int, default=20000)
    ap.add_argument("--batch", type=int, default=20000)
    ap.add_argument("--descent-sweeps", type=int, default=200)
    args = ap.parse_args()

    impls = [("numpy", _kernels_py)]
    if kernels._COMPILED is not None:
        impls.insert(0, ("compiled", kernels._COMPILED))
    else:
        print("compiled extension not available; benchmarking fallback only")

    rng = np.random.default_rng(0)
    basis = _random_basis(rng, args.dim, args.q)
    single = basis[0]
    coeffs = rng.standard_normal((args.batch, args.dim))
    c0 = rng.standard_normal(args.dim)

    rows = []
    for name, impl in impls:
        t_eig = _time(
            lambda: [impl.eig_ascending(single) for _ in range(args.eig_calls)],
            args.repeat,
        )
        t_batch = _time(lambda: impl.batch_stats(basis, coeffs, 1e-9), args.repeat)
        t_desc = _time(
            lambda: impl.coordinate_descent(basis, c0, args.descent_sweeps, 2.0),
            args.repeat,
        )
        evals = impl.coordinate_descent(basis, c0, args.descent_sweeps, 2.0)[2]
        rows.append((name, t_eig / args.eig_calls, t_batch / args.batch, t_desc / evals))

    print(f"\nq={args.q} dim={args.dim}  (best of {args.repeat}, per-call seconds)")
    print(f"{'backend':<10} {'eig':>12} {'batch_stats':>12} {'descent_eval':>13}")
    for name, te, tb, td in rows:
        print(f"{name:<10} {te:>12.3e} {tb:>12.3e} {td:>13.3e}")
    if len(rows) == 2:
        print(
            f"{'speedup':<10} {rows[1][1] / rows[0][1]:>12.1f}x "
            f"{rows[1][2] / rows[0][2]:>11.1f}x {rows[1][3] / rows[0][3]:>12.1f}x"
        )


if __name__ == "__main__":
    main()
