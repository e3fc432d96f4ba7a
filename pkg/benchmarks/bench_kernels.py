#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads mirror where the library actually spends time: truncated exact
convolutions of long integer series (eigenform construction), full products
of mid-size polynomials, and Horner evaluation.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from ikedalift import _kernels_py
from ikedalift.modforms import delta, eisenstein
from ikedalift.qseries import q_binomial

try:
    from ikedalift import _speedups
except ImportError:
    _speedups = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    N = 1000
    series_a = list(delta(N).coeffs)
    series_b = list(eisenstein(4, N).coeffs)
    poly_a = [(-1) ** i * (i**7 + 3) for i in range(301)]
    poly_b = [(i**5 - 11) for i in range(301)]
    qb = q_binomial(16, 8).coeffs
    return [
        ("series convolve_trunc (len 1001, big ints)",
         lambda k: k.convolve_trunc(series_a, series_b, N + 1)),
        ("poly convolve (deg 300 x deg 300)",
         lambda k: k.convolve(poly_a, poly_b)),
        ("horner x2000 (deg 64 at q=97)",
         lambda k: [k.horner(qb, 97) for _ in range(2000)]),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    else:
        print("compiled extension not built; timing pure backend only\n")

    rows = []
    for name, make in workloads():
        times = {}
        results = {}
        for bname, mod in backends:
            results[bname] = make(mod)  # warm-up, kept for the parity check
            times[bname] = timed(lambda m=mod: make(m), args.repeat)
        if len(results) == 2 and results["python"] != results["cython"]:
            raise AssertionError(f"backend results differ on: {name}")
        rows.append((name, times))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':<{width}}  {'python':>10}"
    if _speedups is not None:
        header += f"  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, times in rows:
        line = f"{name:<{width}}  {times['python'] * 1e3:>8.2f}ms"
        if "cython" in times:
            speedup = times["python"] / times["cython"]
            line += f"  {times['cython'] * 1e3:>8.2f}ms  {speedup:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
