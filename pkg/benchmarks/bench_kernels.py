#!/usr/bin/env python3
"""Benchmark the compiled distance kernels against the numpy fallback.

Run from the repo root after building the extension:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from mmdnmf import _kernels_py

try:
    from mmdnmf import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_pair_distances(n, m, rng):
    V = np.ascontiguousarray(rng.uniform(size=(m, n)))
    pairs = np.array([(i, j) for i in range(n) for j in range(i + 1, n)], dtype=np.int64)
    idx_i = np.ascontiguousarray(pairs[:, 0])
    idx_j = np.ascontiguousarray(pairs[:, 1])
    results = {"python": best_of(lambda: _kernels_py.pair_sq_distances(V, idx_i, idx_j))}
    if _kernels_cy is not None:
        results["compiled"] = best_of(lambda: _kernels_cy.pair_sq_distances(V, idx_i, idx_j))
    return len(pairs), results


def bench_distance_matrix(n, m, rng):
    A = np.ascontiguousarray(rng.uniform(size=(m, n)))
    B = np.ascontiguousarray(rng.uniform(size=(m, n // 2)))
    results = {"python": best_of(lambda: _kernels_py.sq_distance_matrix(A, B))}
    if _kernels_cy is not None:
        results["compiled"] = best_of(lambda: _kernels_cy.sq_distance_matrix(A, B))
    return n * (n // 2), results


def main():
    rng = np.random.default_rng(0)
    if _kernels_cy is None:
        print("compiled kernels not available; showing fallback timings only")
    print(f"{'kernel':<22}{'n':>6}{'m':>5}{'size':>10}{'python':>12}{'compiled':>12}{'speedup':>9}")
    for n, m in [(100, 8), (400, 16), (1000, 32)]:
        for name, bench in (("pair_sq_distances", bench_pair_distances),
                            ("sq_distance_matrix", bench_distance_matrix)):
            size, res = bench(n, m, rng)
            pyt = res["python"]
            cyt = res.get("compiled")
            speedup = f"{pyt / cyt:8.2f}x" if cyt else "      --"
            cys = f"{cyt * 1e3:10.3f}ms" if cyt else "        --"
            print(f"{name:<22}{n:>6}{m:>5}{size:>10}{pyt * 1e3:>10.3f}ms{cys}{speedup}")


if __name__ == "__main__":
    main()
