#!/usr/bin/env python3
"""Run the acceptance suite and print one line per criterion (plus JSON with --json)."""

import argparse
import json
import sys

from cubicjordan.acceptance import summary, verify_all
from cubicjordan.config import RunConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--json", metavar="PATH", help="also write the full report here")
    args = ap.parse_args()
    config = RunConfig.from_env().with_overrides(seed=args.seed)
    results = verify_all(config)
    for r in results:
        print(r.line())
        for f in r.failures:
            print(f"    {f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary(results), fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
