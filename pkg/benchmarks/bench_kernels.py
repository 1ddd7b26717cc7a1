#!/usr/bin/env python3
"""Benchmark the compiled convolution kernels against the pure-Python
Kronecker-substitution fallback.

Run:  python benchmarks/bench_kernels.py [--quick]

The compiled schoolbook loop is quadratic while the Kronecker path rides
CPython's subquadratic bignum multiply, so the fallback overtakes it at
large orders; the dispatch crossover in qbracelet._kernel is set from
these numbers.  The modulus-2 word-parallel kernel and the Kronecker path
stay within a small factor of each other across the whole range.
"""

from __future__ import annotations

import argparse
import random
import time

from qbracelet._kernel import fallback

try:
    from qbracelet._kernel import _speedups
except ImportError:
    _speedups = None


def timeit(fn, *args, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_mod(m: int, orders: list[int], rng: random.Random) -> None:
    print(f"\nmodulus {m}")
    header = f"{'order':>8} {'python (ms)':>14} {'compiled (ms)':>14} {'ratio':>8}"
    print(header)
    print("-" * len(header))
    for n in orders:
        x = [rng.randrange(m) for _ in range(n + 1)]
        y = [rng.randrange(m) for _ in range(n + 1)]
        t_py = timeit(fallback.conv_mod, x, y, n, m)
        if _speedups is None:
            print(f"{n:>8} {t_py * 1e3:>14.3f} {'n/a':>14} {'':>8}")
            continue
        if m == 2:
            t_c = timeit(_speedups.conv_mod2_packed, x, y, n)
        else:
            t_c = timeit(_speedups.conv_mod_small, x, y, n, m)
        assert fallback.conv_mod(x, y, n, m) == (
            _speedups.conv_mod2_packed(x, y, n)
            if m == 2
            else _speedups.conv_mod_small(x, y, n, m)
        )
        print(
            f"{n:>8} {t_py * 1e3:>14.3f} {t_c * 1e3:>14.3f} {t_py / t_c:>8.2f}"
        )


def bench_exact(orders: list[int], rng: random.Random) -> None:
    print("\nexact integers (shared Kronecker path, shown for scale)")
    print(f"{'order':>8} {'time (ms)':>14}")
    for n in orders:
        x = [rng.randrange(-(10**6), 10**6) for _ in range(n + 1)]
        y = [rng.randrange(-(10**6), 10**6) for _ in range(n + 1)]
        t = timeit(fallback.conv_exact, x, y, n)
        print(f"{n:>8} {t * 1e3:>14.3f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller grid")
    args = parser.parse_args()

    rng = random.Random(20240901)
    if args.quick:
        grid2 = [1024, 8192]
        grid5 = [1024, 4096]
        gride = [512, 2048]
    else:
        grid2 = [1024, 4096, 16384, 32768, 49152]
        grid5 = [1024, 4096, 8192, 16384, 24576]
        gride = [512, 1024, 2048]

    if _speedups is None:
        print("compiled extension not available; showing fallback only")
    bench_mod(2, grid2, rng)
    bench_mod(5, grid5, rng)
    bench_mod(121, grid5, rng)
    bench_exact(gride, rng)


if __name__ == "__main__":
    main()
