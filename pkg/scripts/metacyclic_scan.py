#!/usr/bin/env python3
"""Scan metacyclic groups C_n x| C_m and count irrational non-abelian ones."""
import argparse

from irratio import irrationality as I
from irratio import structure as S
from irratio.grammar import build
from irratio.suites import metacyclic_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--max-m", type=int, default=16)
    ap.add_argument("--max-order", type=int, default=2000)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()

    grid = metacyclic_grid(args.max_n, args.max_m, args.max_order)
    counts = {"abelian": 0, "irrational": 0, "nonabelian_irrational": 0}
    for n, m, k in grid:
        G = build(f"metacyclic({n},{m},{k})")
        ab = S.is_abelian(G)
        irr = bool(I.is_irrational(G))
        counts["abelian"] += ab
        counts["irrational"] += irr
        counts["nonabelian_irrational"] += irr and not ab
        if args.verbose or (irr and not ab):
            print(f"metacyclic({n},{m},{k}) order {G.order} abelian={ab} irrational={irr}")
    print(f"{len(grid)} groups: {counts}")


if __name__ == "__main__":
    main()
