#!/usr/bin/env python3
"""Solve for the secant line through seeded general points and show the exact solutions."""

import argparse

from cubicjordan.acceptance import OADP_ALGEBRAS
from cubicjordan.catalog import catalog_get
from cubicjordan.config import RunConfig
from cubicjordan.variety import oadp_solve, seeded_secant_queries


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algebra", action="append", help="catalog name (repeatable)")
    ap.add_argument("--count", type=int, default=3)
    ap.add_argument("--seed", type=int, default=None)
    args = ap.parse_args()
    config = RunConfig.from_env().with_overrides(seed=args.seed)
    for name in args.algebra or OADP_ALGEBRAS:
        J = catalog_get(name, config).algebra
        print(f"== {name} (dim {J.dim})")
        for q in seeded_secant_queries(J, args.count, config):
            sol = oadp_solve(J, q)
            ok = sol.line_check and sol.on_X and sol.conjugation_swaps
            print(f"q = {q}")
            print(f"  D = {sol.D}, lambda*mu = {sol.lambda_mu}, lambda = {sol.lam}")
            print(f"  p1 = [{', '.join(str(c) for c in sol.p1.coords())}]")
            print(f"  p2 = [{', '.join(str(c) for c in sol.p2.coords())}]")
            print(f"  checks: {'ok' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
