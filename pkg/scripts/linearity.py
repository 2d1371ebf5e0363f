"""Time the linear-mode solver on growing random polygons.

Prints advance_steps / n and wall time per size; the step ratio should stay
flat and the time should grow roughly tenfold per decade.

    python3 scripts/linearity.py [--sizes 1000 10000 100000] [--seed 7]
"""
import argparse
import time

from trienc.enclosing import LINEAR, solve
from trienc.oracle import random_convex_polygon


def measure(n, seed):
    poly = random_convex_polygon(n, seed)
    t0 = time.perf_counter()
    rep = solve(poly, mode=LINEAR)
    return rep.advance_steps / n, time.perf_counter() - t0, rep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    prev = None
    print(f"{'n':>8} {'steps/n':>9} {'time[s]':>9} {'ratio':>7} {'mean flips':>10}")
    for n in args.sizes:
        per_n, dt, rep = measure(n, args.seed)
        ratio = f"{dt / prev:7.2f}" if prev else "      -"
        flips = sum(rep.flip_counts) / len(rep.flip_counts)
        print(f"{n:>8} {per_n:9.2f} {dt:9.2f} {ratio} {flips:10.2f}")
        prev = dt


if __name__ == "__main__":
    main()
