"""Benchmark the enumeration kernels: numba JIT vs pure-numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--heavy]

The naive re-encode path is timed only on the small instance (it exists for
differential testing, not speed).  Set CARTESIAN_NO_NUMBA=1 to confirm the
fallback selection; this script times both paths explicitly regardless.
"""

import argparse
import time

import cartcodes as cc
from cartcodes import _kernels
from cartcodes.oracle import OracleBudget, brute_min_distance, brute_rank_dimension


def _time(fn, repeat=1):
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return value, best


def bench_scan(code, label, methods):
    mat = code.generator_matrix()
    tables = code.field.tables()
    total = code.field.q**mat.rows
    print(f"\nscan {label}: {total} words x length {mat.cols}")
    base = None
    for method in methods:
        (value, secs) = _time(lambda: _kernels.scan_min_weight(mat.array, tables, method=method))
        rate = total / secs / 1e6
        note = ""
        if base is None:
            base = secs
        else:
            note = f"  ({secs / base:.1f}x the {methods[0]} time)"
        print(f"  {method:6s}  min_weight={value}  {secs:8.3f} s  {rate:8.1f} Mwords/s{note}")


def bench_rank(code, label, methods):
    from cartcodes.oracle import _full_monomial_matrix

    arr = _full_monomial_matrix(code, OracleBudget())
    tables = code.field.tables()
    print(f"\nrank {label}: {arr.shape[0]} x {arr.shape[1]} matrix")
    for method in methods:
        value, secs = _time(lambda: _kernels.rank_mod(arr, tables, method=method), repeat=3)
        print(f"  {method:6s}  rank={value}  {secs:8.4f} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true", help="add a ~10M-word instance")
    args = ap.parse_args()

    methods = (["numba"] if _kernels.HAS_NUMBA else []) + ["numpy"]
    if not _kernels.HAS_NUMBA:
        print("numba unavailable; timing the numpy fallback only")
    if _kernels.HAS_NUMBA:
        # warm the JIT cache outside the timed region
        small = cc.normalize_spec(cc.make_field(2), [(0, 1), (0, 1)], 1)
        brute_min_distance(small, method="numba")
        brute_rank_dimension(small, method="numba")

    F4 = cc.make_field(2, 2)
    small = cc.normalize_spec(F4, [tuple(range(3)), tuple(range(4))], 3)
    bench_scan(small, "F4 cards (3,4) d=3", methods + ["naive"])

    mid = cc.normalize_spec(F4, [tuple(range(4))] * 3, 2)
    bench_scan(mid, "F4 cards (4,4,4) d=2", methods)

    if args.heavy:
        F5 = cc.make_field(5)
        heavy = cc.normalize_spec(F5, [tuple(range(5))] * 3, 2)
        bench_scan(heavy, "F5 cards (5,5,5) d=2", methods)

    F5 = cc.make_field(5)
    rank_code = cc.normalize_spec(F5, [tuple(range(5))] * 3, 8)
    bench_rank(rank_code, "F5 cards (5,5,5) d=8", methods)


if __name__ == "__main__":
    main()
