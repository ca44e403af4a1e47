"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from chromod import kernels
from chromod.dyck import from_values


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


CASES = [
    ("colorings h=(1..7) [empty graph]", lambda impl: impl.coloring_counts(from_values(range(1, 8)), 7)),
    ("colorings h=(3,4,5,6,7,7,7)", lambda impl: impl.coloring_counts(from_values((3, 4, 5, 6, 7, 7, 7)), 7)),
    ("colorings h=(2,3,4,5,6,7,8,8)", lambda impl: impl.coloring_counts(from_values((2, 3, 4, 5, 6, 7, 8, 8)), 8)),
    ("rooks m=7 lam=(4,3,2,2)", lambda impl: impl.rook_counts(7, (4, 3, 2, 2))),
    ("rooks m=8 lam=(5,4,4,2,1)", lambda impl: impl.rook_counts(8, (5, 4, 4, 2, 1))),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_impl is None:
        print("compiled kernels unavailable; only the Python backend is timed")
    print(f"{'case':36} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, run in CASES:
        tp, rp = best_of(lambda: run(kernels.python_impl), args.repeat)
        if kernels.compiled_impl is None:
            print(f"{name:36} {tp:10.4f} {'-':>11} {'-':>8}")
            continue
        tc, rc = best_of(lambda: run(kernels.compiled_impl), args.repeat)
        assert rp == rc, f"backends disagree on {name}"
        print(f"{name:36} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
