#!/usr/bin/env python3
"""Print the bound functions on a grid as TSV and report whether pibar = pi everywhere."""

import argparse
import sys

from cubicjordan.bounds import TABLE_HEADER, table_rows
from cubicjordan.core.scalar import fmt_scalar


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--delta-max", type=int, default=20)
    args = ap.parse_args()
    rows = list(table_rows(range(1, args.r_max + 1), range(2, args.n_max + 1), args.delta_max))
    print("\t".join(TABLE_HEADER))
    for row in rows:
        print("\t".join(fmt_scalar(c) for c in row))
    bad = [row[:3] for row in rows if row[7] != row[8]]
    print(f"# {len(rows)} cases, {len(bad)} mismatches", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
