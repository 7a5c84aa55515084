"""Benchmark: compiled vs pure-Python polynomial kernels.

The iteration oracle spends essentially all of its time in mul_terms,
so this times the raw kernel on product sizes typical of fuzz
campaigns and deep fixture iterations, then an end-to-end oracle run
through each backend.

Usage: python benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

from skewprod import _kernels

try:
    from skewprod import _speedups
except ImportError:
    _speedups = None


def random_terms(rng, size, max_exp):
    out = {}
    while len(out) < size:
        out[(rng.randint(0, max_exp), rng.randint(0, max_exp))] = \
            rng.randint(-9, 9) or 1
    return out


def time_call(fn, *args, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_mul():
    rng = random.Random(1)
    print(f"{'terms a x b':>14} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")
    for size, max_exp in ((30, 12), (120, 40), (400, 120), (1200, 400)):
        a = random_terms(rng, size, max_exp)
        b = random_terms(rng, size, max_exp)
        pure = time_call(_kernels.mul_terms, a, b)
        if _speedups is None:
            print(f"{size:>6} x {size:<5} {pure*1e3:>10.2f} {'n/a':>14}")
            continue
        assert _speedups.mul_terms(a, b) == _kernels.mul_terms(a, b)
        fast = time_call(_speedups.mul_terms, a, b)
        print(f"{size:>6} x {size:<5} {pure*1e3:>10.2f} {fast*1e3:>14.2f} "
              f"{pure/fast:>7.2f}x")


END_TO_END = (
    "import time, skewprod as sp\n"
    "f = sp.SkewGerm(sp.parse_poly('z^2', ('z',)),"
    " sp.parse_poly('w^3 + z*w + z^3'))\n"
    "t0 = time.perf_counter()\n"
    "fn = sp.iterate_germ(f, 5)\n"
    "print(sp.KERNEL_BACKEND, time.perf_counter() - t0, len(fn.q))\n"
)


def bench_end_to_end():
    print("\nend-to-end oracle (5th iterate of a degree-3 germ):")
    results = {}
    for pure in (False, True):
        env = dict(os.environ)
        if pure:
            env["SKEWPROD_PURE"] = "1"
        else:
            env.pop("SKEWPROD_PURE", None)
        out = subprocess.run([sys.executable, "-c", END_TO_END],
                             capture_output=True, text=True, env=env)
        backend, secs, terms = out.stdout.split()
        results[backend] = float(secs)
        print(f"  {backend:>8}: {float(secs):.3f}s  ({terms} terms)")
    if len(results) == 2:
        print(f"  speedup: {results['pure'] / results['compiled']:.2f}x")


if __name__ == "__main__":
    backend = "compiled" if _speedups is not None else "pure only"
    print(f"available backends: pure{' + compiled' if _speedups else ''}")
    bench_mul()
    bench_end_to_end()
