"""Timing comparison of the two enumeration kernels on shared workloads.

Run as `python benchmarks/bench_enum.py [--repeat N]`.  Loads both kernel
modules directly (ignoring the import-time selection) and times the exact
same scaled integer problems on each, confirming identical outputs first.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from latgate import EnumQuery, catalog_get, cholesky, solve_char_coset
from latgate import _pykernel
from latgate.enumeration import _coordinate_bound, _dfs_is_small, _scaled_problem

try:
    from latgate import _speedups
except ImportError:
    _speedups = None


def _workloads():
    zero8 = tuple(Fraction(0) for _ in range(8))
    out = [
        ("E8 ball r=4", catalog_get("E8").gram, zero8, Fraction(4)),
        ("Z12 char ball", None, None, None),
        ("D16plus ball r=4", catalog_get("D16plus").gram,
         tuple(Fraction(0) for _ in range(16)), Fraction(4)),
    ]
    g = catalog_get("Zn:12").gram
    w0 = solve_char_coset(g).base
    out[1] = ("Z12 char ball", g, tuple(Fraction(w, 2) for w in w0), Fraction(3))
    return out


def _time_kernel(kernel, n, W, M, T, D, C, small, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        start = time.perf_counter()
        results = kernel.dfs_enumerate(n, W, M, T, D, C, small=small)
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="repetitions, best-of")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel unavailable; only the pure kernel is timed")
    print(f"{'workload':<18} {'vectors':>8} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, gram, shift, radius in _workloads():
        query = EnumQuery(form=gram, shift=shift, radius=radius)
        chol = cholesky(query.form)
        W, M, T, D, C, _scale = _scaled_problem(chol, query.shift, query.radius)
        box = _coordinate_bound(chol, query.shift, query.radius)
        small = _dfs_is_small(gram.rank, W, M, T, D, C, box)
        py_t, py_r = _time_kernel(_pykernel, gram.rank, W, M, T, D, C, small, args.repeat)
        row = f"{name:<18} {len(py_r[0]):>8} {py_t * 1e3:>8.2f}ms"
        if _speedups is not None:
            cy_t, cy_r = _time_kernel(_speedups, gram.rank, W, M, T, D, C, small, args.repeat)
            assert sorted(py_r[0]) == sorted(cy_r[0]), f"kernel outputs differ on {name}"
            assert py_r[1:] == cy_r[1:], f"kernel counters differ on {name}"
            row += f" {cy_t * 1e3:>8.2f}ms {py_t / cy_t:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
