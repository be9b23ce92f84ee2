"""Compare the compiled counting kernel with the pure-Python fallback.

    python benchmarks/bench_kernel.py [--max-n 4] [--c 5] [--repeat 3]

Each case counts every (n-1, n, c)-pattern completion for all top entries
k in [-n-1, c+n+1]; both backends must return identical tables.
"""

import argparse
import time

from planepart import _kernel_py

try:
    from planepart import _kernel
except ImportError:
    _kernel = None


def workload(impl, n: int, c: int) -> list:
    return [impl.count_completions([k], n - 1, n, c) for k in range(-n - 1, c + n + 2)]


def best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--c", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")
    print(f"{'n':>2} {'c':>2} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for n in range(1, args.max_n + 1):
        py = best_of(args.repeat, lambda: workload(_kernel_py, n, args.c))
        if _kernel is None:
            print(f"{n:>2} {args.c:>2} {py * 1e3:>12.2f} {'-':>12} {'-':>8}")
            continue
        assert workload(_kernel, n, args.c) == workload(_kernel_py, n, args.c), "backends disagree"
        cy = best_of(args.repeat, lambda: workload(_kernel, n, args.c))
        print(f"{n:>2} {args.c:>2} {py * 1e3:>12.2f} {cy * 1e3:>12.2f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
