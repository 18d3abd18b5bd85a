#!/usr/bin/env python3
"""Scan the stable two-row coefficients three ways: generating function,
marked-partition enumeration, and the branching formula.

    python scripts/stable_scan.py --max-b 4 --max-r 10
"""

import argparse
import sys

from plethyra.coefficients import ramified_branching, two_row_stable
from plethyra.partitions import stable_two_row_gf


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-b", type=int, default=4)
    parser.add_argument("--max-r", type=int, default=10)
    args = parser.parse_args(argv)

    mismatches = 0
    header = "b\\r " + " ".join(f"{r:>4}" for r in range(args.max_r + 1))
    print(header)
    for b in range(args.max_b + 1):
        series = stable_two_row_gf(b, args.max_r)
        cells = []
        for r in range(args.max_r + 1):
            enum = two_row_stable(b, r)
            beta = (b,) if b else ()
            kappa = (r,) if r else ()
            formula = ramified_branching((), beta, kappa) if (r or not b) else enum
            if not (series[r] == enum == formula):
                mismatches += 1
                cells.append("  !!")
            else:
                cells.append(f"{enum:>4}")
        print(f"{b:<3} " + " ".join(cells))
    if mismatches:
        print(f"{mismatches} route disagreements", file=sys.stderr)
        return 2
    print("all three routes agree on every cell")
    return 0


if __name__ == "__main__":
    sys.exit(main())
