#!/usr/bin/env python3
"""Print a table of ramified branching coefficients rc(alpha^beta, kappa)
over all kappa of a given size, with the brute-force plethysm column when
a comparison point (m, n) is supplied.

Examples:
    python scripts/branching_tables.py --beta 2,1 --r 5
    python scripts/branching_tables.py --alpha 1 --beta 2,1 --r 5 --m 4 --n 3
"""

import argparse
import sys
import time

from plethyra.cli import parse_partition
from plethyra.coefficients import plethysm_coefficient, ramified_branching
from plethyra.partitions import pad, partitions_of


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", default="[]")
    parser.add_argument("--beta", default="[]")
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--m", type=int, default=None,
                        help="inner-size comparison point")
    parser.add_argument("--n", type=int, default=None,
                        help="outer-size comparison point (alpha empty only)")
    args = parser.parse_args(argv)

    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    start = time.perf_counter()
    rows = []
    for kappa in partitions_of(args.r):
        rc = ramified_branching(alpha, beta, kappa)
        brute = ""
        if args.m is not None:
            m = args.m
            try:
                if alpha == ():
                    n = args.n if args.n is not None else args.r + (beta[0] if beta else 0)
                    nu, mu = pad(beta, n), (m,)
                else:
                    # fixed outer beta, inner alpha[m]
                    nu, mu = beta, pad(alpha, m)
                lam = pad(kappa, sum(nu) * sum(mu))
                brute = plethysm_coefficient(nu, mu, lam)
            except ValueError as exc:
                brute = f"n/a ({exc})"
        rows.append((kappa, rc, brute))

    label = f"rc({list(alpha)}^{list(beta)}, kappa) for kappa |- {args.r}"
    print(label)
    width = max(len(str(list(k))) for k, _, _ in rows)
    for kappa, rc, brute in rows:
        line = f"  {str(list(kappa)):<{width}}  rc = {rc}"
        if brute != "":
            line += f"   brute = {brute}"
        print(line)
    print(f"({time.perf_counter() - start:.2f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
