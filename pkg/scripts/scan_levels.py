#!/usr/bin/env python3
"""Scan the twisted Mordell family Y^2 = X^3 +- 3^a * N^b for S-integral
points, reporting candidate (c4, c6) pairs for curves of conductor 3^k * N.

Example:  python scripts/scan_levels.py --N 353 --a-bound 9 --b-bound 2 \\
              --S 2,3,353 --height 10000
"""

import argparse

from modpcurves.mordell import scan_twisted_mordell


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--N", type=int, required=True)
    parser.add_argument("--a-bound", type=int, default=9)
    parser.add_argument("--b-bound", type=int, default=2)
    parser.add_argument("--S", default="")
    parser.add_argument("--height", type=int, default=10**4)
    parser.add_argument("--exponent-bound", type=int, default=0)
    args = parser.parse_args()
    S = {int(t) for t in args.S.split(",")} if args.S else set()
    report = scan_twisted_mordell(args.N, args.a_bound, args.b_bound, S,
                                  args.height, args.exponent_bound)
    print(f"scanned {len(report.cases)} values of k for N = {args.N}")
    for k, pts in report.hits:
        print(f"k = {k}:")
        for P in pts:
            print(f"  ({P.x}, {P.y})")
    for k, x, y, delta, d in report.candidate_c4c6():
        print(f"candidate c4 = {x}, c6 = {y} (denom {d}), "
              f"Delta = {delta}, from k = {k}")
    if not report.hits:
        print("no points found in the box")


if __name__ == "__main__":
    main()
