"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 5]

Each kernel runs once untimed per backend (numba compiles on first call),
then ``--repeat`` times; the best wall time is reported.  Outputs of the
two backends are compared for equality before timing.
"""

import argparse
import time

import numpy as np

from hopfint._accel import _enumerate_cached, howell_mod

# bypass the per-process cache so every call does the work
enumerate_uncached = _enumerate_cached.__wrapped__


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    for m, shape in [(12, (20, 20)), (360, (40, 40)), (2**20 - 3, (60, 60))]:
        A = rng.integers(0, m, size=shape)
        yield f"howell Z/{m} {shape[0]}x{shape[1]}", lambda b, A=A, m=m: howell_mod(A, m, b)
    for n in (3, 4):
        yield f"semigroup tables n={n}", lambda b, n=n: enumerate_uncached(n, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':<28} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8}")
    for name, run in cases():
        if not np.array_equal(run("numpy"), run("numba")):
            raise SystemExit(f"backends disagree on {name}")
        t_np = best_of(lambda: run("numpy"), args.repeat)
        t_nb = best_of(lambda: run("numba"), args.repeat)
        print(f"{name:<28} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
