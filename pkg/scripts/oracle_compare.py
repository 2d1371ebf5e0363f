"""Compare solver and brute-force oracle on the frozen corpus.

    python3 scripts/oracle_compare.py [--corpus corpus] [--coarse-steps 360]

Gaps are relative, in normalized units: (solver - oracle) / oracle.
"""
import argparse
import json
import os
import time

from trienc.enclosing import LINEAR, QUADRATIC_SAFE, solve
from trienc.oracle import oracle_min_perimeter
from trienc.polygon_io import parse_polygon, validate_normalize


def load_corpus(root):
    with open(os.path.join(root, "manifest.json")) as fh:
        manifest = json.load(fh)
    for entry in manifest["polygons"]:
        with open(os.path.join(root, entry["file"]), "rb") as fh:
            yield entry, validate_normalize(parse_polygon(fh.read(), source=entry["file"]))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", default=os.path.join(os.path.dirname(__file__), "..", "corpus"))
    ap.add_argument("--coarse-steps", type=int, default=360)
    args = ap.parse_args()
    worst_gap = worst_mode = 0.0
    t0 = time.perf_counter()
    for entry, poly in load_corpus(args.corpus):
        lin = solve(poly, LINEAR)
        quad = solve(poly, QUADRATIC_SAFE)
        orc = oracle_min_perimeter(poly, coarse_steps=args.coarse_steps)
        gap = (lin.normalized_perimeter - orc.normalized_perimeter) / orc.normalized_perimeter
        mode_gap = abs(lin.normalized_perimeter - quad.normalized_perimeter) / quad.normalized_perimeter
        worst_gap = max(worst_gap, abs(gap))
        worst_mode = max(worst_mode, mode_gap)
        print(f"{entry['file']:<24} n={poly.n:<3} solver={lin.normalized_perimeter:.12f} "
              f"oracle={orc.normalized_perimeter:.12f} gap={gap:+.2e} modes={mode_gap:.1e}")
    print(f"worst |gap| {worst_gap:.3e}, worst mode disagreement {worst_mode:.3e}, "
          f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
