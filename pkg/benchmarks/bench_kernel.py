#!/usr/bin/env python3
"""Compare the pure-Python and compiled polynomial kernels.

Two hot paths dominate the package's runtime: high-degree integer gcds
(the power sweeps compose polynomials of degree ~ k * deg g) and
fraction-free rank elimination (slice verification).  This script times
both backends on the same seeded inputs and prints a small table.

Usage: python benchmarks/bench_kernel.py [--repeat 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from torigcd.kernel import load_backend


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _random_poly(rng: random.Random, deg: int):
    p = [rng.randint(-5, 5) for _ in range(deg + 1)]
    p[-1] = rng.randint(1, 5)
    return p


def _shared_factor_case(rng: random.Random, deg: int, cofactor_deg: int = 4):
    # sweep-shaped inputs: a huge common factor with small coprime cofactors,
    # so the remainder sequence collapses in a handful of steps
    w = _random_poly(rng, deg)
    return _poly_mul(w, _random_poly(rng, cofactor_deg)), _poly_mul(
        w, _random_poly(rng, cofactor_deg)
    )


def _full_walk_case(rng: random.Random, deg: int):
    # generically coprime pair: the sequence walks the whole degree range
    return _random_poly(rng, deg), _random_poly(rng, deg)


def _rank_case(rng: random.Random, rows: int, cols: int):
    return [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    pure = load_backend("pure")
    try:
        compiled = load_backend("compiled")
    except ImportError:
        print("compiled backend unavailable; build the extension first")
        return

    cases = []
    rng = random.Random(args.seed)
    for deg in (1000, 4000, 10000):
        f, g = _shared_factor_case(rng, deg)
        cases.append((f"gcd shared {deg}", lambda b, f=f, g=g: b.gcd(f, g)))
    for deg in (80, 160):
        f, g = _full_walk_case(rng, deg)
        cases.append((f"gcd walk {deg}", lambda b, f=f, g=g: b.gcd(f, g)))
    for shape in ((60, 80), (90, 120)):
        m = _rank_case(rng, *shape)
        cases.append(
            (
                f"rank {shape[0]}x{shape[1]}",
                lambda b, m=m: b.bareiss_rank([row[:] for row in m]),
            )
        )

    print(f"{'case':<16} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, fn in cases:
        out_pure = fn(pure)
        out_comp = fn(compiled)
        if out_pure != out_comp:
            raise SystemExit(f"backend mismatch on {name}")
        t_pure = _time(lambda: fn(pure), args.repeat)
        t_comp = _time(lambda: fn(compiled), args.repeat)
        print(f"{name:<16} {t_pure:>10.4f} {t_comp:>13.4f} {t_pure / t_comp:>7.2f}x")


if __name__ == "__main__":
    main()
