#!/usr/bin/env python3
"""Dump the per-domain diagrams and orbit graph of a family as DOT.

Usage: python3 scripts/render_dynkin.py A 1 1 > a11.dot
"""

import sys

from superhecke.domains import Family
from superhecke.roots import dynkin_dot


def main() -> int:
    if len(sys.argv) != 4:
        print(__doc__, file=sys.stderr)
        return 2
    kind, m, n = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
    sys.stdout.write(dynkin_dot(Family(kind, m, n)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
