#!/usr/bin/env python3
"""Sweep small parameters and tabulate |W \\ 0| against the closed formulas.

Usage: python3 scripts/dimension_table.py [--max-size 2500]
"""

import argparse
import time

from superhecke.domains import Family
from superhecke.groupoid import CoxeterGroupoid, dimension_formula


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=2500,
                        help="skip families whose formula value exceeds this")
    args = parser.parse_args()
    cases = []
    for m in range(0, 4):
        for n in range(0, 4):
            cases.append(Family("A", m, n))
            if n >= 1:
                cases.append(Family("B", m, n))
            if m >= 1 and n >= 1:
                cases.append(Family("CD", m, n))
    print(f"{'family':>12} {'formula':>8} {'enumerated':>11} {'seconds':>8}")
    for fam in cases:
        expect = dimension_formula(fam)
        if expect > args.max_size:
            continue
        t0 = time.time()
        count = CoxeterGroupoid(fam).order()
        mark = "" if count == expect else "  MISMATCH"
        print(f"{fam.name():>12} {expect:8d} {count:11d} {time.time() - t0:8.2f}{mark}")


if __name__ == "__main__":
    main()
