#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the numpy fallback.

Run after an editable install:

    python3 bench/bench_rowred.py [--sizes 200,400,800] [--p 5]

Reports wall time for a full RREF of a dense random matrix at each size,
for both code paths, and checks they return identical output.
"""

import argparse
import time

import numpy as np

from engel_lab import linalg
from engel_lab.linalg import _rref_pure, as_modp


def run_once(a, p, use_ext):
    m = a.copy()
    t0 = time.perf_counter()
    if use_ext:
        from engel_lab import _rowred

        piv = _rowred.rref_inplace(m, p)
    else:
        piv = _rref_pure(m, p)
    dt = time.perf_counter() - t0
    return dt, m[: len(piv)], piv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="200,400,800")
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not linalg.USING_EXTENSION:
        try:
            from engel_lab import _rowred  # noqa: F401
        except ImportError:
            print("compiled kernel not available; only timing the fallback")

    rng = np.random.default_rng(12345)
    print(f"{'n':>6} {'compiled':>12} {'pure numpy':>12} {'ratio':>8}")
    for n in sizes:
        a = as_modp(rng.integers(0, args.p, size=(n, n + 40)), args.p)
        t_pure, R1, p1 = run_once(a, args.p, use_ext=False)
        try:
            t_ext, R2, p2 = run_once(a, args.p, use_ext=True)
        except ImportError:
            print(f"{n:>6} {'-':>12} {t_pure:>10.3f}s")
            continue
        assert p1 == p2 and np.array_equal(R1, R2), "kernel/fallback mismatch"
        print(f"{n:>6} {t_ext:>10.3f}s {t_pure:>10.3f}s {t_pure / t_ext:>8.2f}")


if __name__ == "__main__":
    main()
