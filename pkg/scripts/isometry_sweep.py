"""Exhaustive distance checks for eta, xi and their products.

For every map and every pair of weights given, prints the number of pairs
checked and the number of violations.
"""

import argparse
import time

from modgray import graymaps as gm
from modgray.weights import WeightKind


def maps(max_s):
    for s in range(2, max_s + 1):
        yield gm.eta(s)
        if s in gm.XI_SIZES:
            yield gm.xi(s)
        yield gm.compose_modular(s)
        if s >= 3:
            yield gm.vega_map(s)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=8)
    ap.add_argument("--weights", nargs="+", default=["homogeneous"],
                    help="weight kinds, or src:dst pairs such as lee:hamming")
    ap.add_argument("--layout", default="blockwise")
    args = ap.parse_args()
    for g in maps(args.max_s):
        for w in args.weights:
            src, _, dst = w.partition(":")
            src, dst = WeightKind.parse(src), WeightKind.parse(dst or src)
            t0 = time.perf_counter()
            r = gm.verify_isometry(g, args.layout, src, dst)
            dt = time.perf_counter() - t0
            tag = "isometry" if r.verdict else "NOT isometry"
            print(f"{g.name:<10} {src.value:>17} -> {dst.value:<17} {r.summary():<28} {tag:<13} {dt * 1e3:7.1f} ms")


if __name__ == "__main__":
    main()
