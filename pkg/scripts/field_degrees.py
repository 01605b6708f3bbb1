#!/usr/bin/env python3
"""Tabulate power-orbit statistics for a list of groups.

For every group: order, class count, verdict, and the histogram of the
character-field degrees phi(n)/|B| over its classes.  A group is irrational
exactly when every class of order > 2 has B = {1}.
"""
import argparse
import collections
import time

from irratio import irrationality as I
from irratio.grammar import build
from irratio.suites import CATALOG


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("specs", nargs="*", help="group specs (default: the suite catalog)")
    ap.add_argument("--max-order", type=int, default=200_000)
    ap.add_argument("--oracle", action="store_true", help="also run the N = C cross-check")
    args = ap.parse_args()

    print(f"{'spec':<48} {'order':>7} {'cls':>4} {'irr':>4} {'2-irr':>5}  degrees")
    for spec in args.specs or CATALOG:
        G = build(spec)
        t = time.perf_counter()
        try:
            G.enumerate(args.max_order)
        except Exception as exc:  # budget or construction error; keep going
            print(f"{spec:<48} skipped: {exc}")
            continue
        rep = I.irrationality_report(G)
        hist = collections.Counter(r.field_degree for r in rep["rows"])
        degs = " ".join(f"{d}:{c}" for d, c in sorted(hist.items()))
        line = (f"{spec:<48} {G.order:>7} {len(rep['rows']):>4} {str(rep['irrational'])[0]:>4} "
                f"{str(rep['per_prime'].get(2, True))[0]:>5}  {degs}")
        if args.oracle:
            agree, total = I.crosscheck_all(G)
            line += f"  oracle {agree}/{total}"
        print(line + f"  ({time.perf_counter() - t:.1f} s)")


if __name__ == "__main__":
    main()
