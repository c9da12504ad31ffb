"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call both modules directly in one process.  The end-to-end
row runs ``changhee verify`` in a fresh interpreter per backend, so the
memoized family tables start cold each time.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from changhee import _kernels_py

try:
    from changhee import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _rationals(rng, n, bits):
    return [Fraction(rng.getrandbits(bits) - (1 << (bits - 1)), rng.getrandbits(bits) | 1) for _ in range(n)]


def kernel_cases(seed=1):
    rng = random.Random(seed)
    a, b = _rationals(rng, 40, 48), _rationals(rng, 40, 48)
    ints = [Fraction(rng.randrange(-99, 100)) for _ in range(120)]
    v = Fraction(-7, 3)
    return {
        "rat_convolve 40x40 (48-bit)": lambda m: m.rat_convolve(a, b),
        "rat_convolve 120x120 (ints)": lambda m: m.rat_convolve(ints, ints),
        "rat_horner deg 40 at -7/3": lambda m: m.rat_horner(a, v),
        "stirling_table s1 n=60": lambda m: m.stirling_table(1, 60),
        "stirling_table s2 n=60": lambda m: m.stirling_table(2, 60),
    }


def best(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def end_to_end(pure):
    env = dict(os.environ, CHANGHEE_PURE_PYTHON="1" if pure else "0")
    code = ("import time; from changhee.identities import verify_all; t = time.perf_counter(); "
            "verify_all(12, 6); print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels_c is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'case':34} {'python':>12} {'cython':>12} {'speedup':>8}")
    for label, fn in kernel_cases().items():
        py = best(lambda: fn(_kernels_py), args.repeat)
        if _kernels_c is not None:
            assert fn(_kernels_c) == fn(_kernels_py), label
            cy = best(lambda: fn(_kernels_c), args.repeat)
            print(f"{label:34} {py * 1e6:10.1f}us {cy * 1e6:10.1f}us {py / cy:7.2f}x")
        else:
            print(f"{label:34} {py * 1e6:10.1f}us")
    py = end_to_end(True)
    line = f"{'verify_all(12, 6), cold':34} {py * 1e3:10.0f}ms"
    if _kernels_c is not None:
        cy = end_to_end(False)
        line += f" {cy * 1e3:10.0f}ms {py / cy:7.2f}x"
    print(line)


if __name__ == "__main__":
    main()
