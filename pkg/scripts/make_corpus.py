"""Write the frozen test corpus.

Polygon k (k = 0..99) has n = 3 + k % 48 vertices and seed 1000 + k, so every
size from 3 to 50 appears at least twice.  Re-running this script reproduces
the files byte for byte.

    python3 scripts/make_corpus.py [--out corpus] [--count 100]
"""
import argparse
import json
import os

from trienc.oracle import random_convex_polygon
from trienc.polygon_io import serialize_polygon

SEED_BASE = 1000


def corpus_entries(count=100):
    return [(f"poly_{k:03d}.json", 3 + k % 48, SEED_BASE + k) for k in range(count)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "corpus"))
    ap.add_argument("--count", type=int, default=100)
    args = ap.parse_args()
    poly_dir = os.path.join(args.out, "polygons")
    os.makedirs(poly_dir, exist_ok=True)
    manifest = []
    for name, n, seed in corpus_entries(args.count):
        poly = random_convex_polygon(n, seed)
        with open(os.path.join(poly_dir, name), "w") as fh:
            fh.write(serialize_polygon(poly.vertices))
        manifest.append({"file": f"polygons/{name}", "n": n, "seed": seed})
    with open(os.path.join(args.out, "manifest.json"), "w") as fh:
        json.dump({"generator": "trienc.oracle.random_convex_polygon", "polygons": manifest}, fh, indent=1)
        fh.write("\n")
    print(f"wrote {len(manifest)} polygons to {os.path.normpath(args.out)}")


if __name__ == "__main__":
    main()
