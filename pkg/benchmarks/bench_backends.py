"""Compare the compiled kernels against the pure-Python reference.

Runs the same workloads through both backends by calling the kernel
modules directly, bypassing the import-time dispatcher, then prints a
small table with the speedup.  Usage:

    python3 benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import time

from furtherness import enumerate_topologies, random_space
from furtherness._kernels import pure

try:
    from furtherness._kernels import _ckern
except ImportError:
    _ckern = None


def bench_matrices(kern, bases):
    for n, basis in bases:
        kern.further_matrix(n, basis)


def bench_enumeration(kern):
    kern.enumerate_bases(5, False)


def bench_regions(kern, jobs):
    for n, flat, a, target in jobs:
        kern.center_radius(n, flat, a, target)
        kern.point_to_set(n, flat, 0, target or 1)


def make_workloads():
    bases = [(sp.n, sp.basis) for sp in enumerate_topologies(5)]
    jobs = []
    for seed in range(300):
        sp = random_space(7, seed=seed)
        flat = sp.further_flat
        full = (1 << sp.n) - 1
        for a in (0b0000011, 0b0101010, 0b1110000):
            jobs.append((sp.n, flat, a, full ^ a))
    return bases, jobs


def run(label, fn, repeat):
    best = min(timeit(fn) for _ in range(repeat))
    print(f"  {label:<28} {best * 1000:9.1f} ms")
    return best


def timeit(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    bases, jobs = make_workloads()
    workloads = [
        ("matrix sweep (6942 spaces)", lambda k: bench_matrices(k, bases)),
        ("enumerate n=5", bench_enumeration),
        ("center/radius sweep", lambda k: bench_regions(k, jobs)),
    ]

    print("pure backend")
    pure_times = [run(label, lambda fn=fn: fn(pure), args.repeat) for label, fn in workloads]

    if _ckern is None:
        print("compiled backend not built; set it up with pip install -e .")
        return

    print("compiled backend")
    c_times = [run(label, lambda fn=fn: fn(_ckern), args.repeat) for label, fn in workloads]

    print("speedup")
    for (label, _), p, c in zip(workloads, pure_times, c_times):
        print(f"  {label:<28} {p / c:9.1f}x")


if __name__ == "__main__":
    main()
