#!/usr/bin/env python3
"""Run named suites and write one JSON report per suite plus a summary table."""
import argparse
import json
import logging
import time
from pathlib import Path

from irratio.cli import emit_report
from irratio.suites import SUITES, run_suite

log = logging.getLogger("run_suites")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="suites to run (default: all)")
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    names = args.names or list(SUITES)
    args.out.mkdir(parents=True, exist_ok=True)
    rows = []
    t0 = time.perf_counter()
    for name in names:
        r = run_suite(name, seed=args.seed)
        (args.out / f"{name}.json").write_text(emit_report(r, "json", not args.no_timing) + "\n")
        failed = sum(not (it.passed or it.optional) for it in r.items)
        rows.append((name, len(r.items), failed, r.seconds))
        log.info("%-40s %4d items %3d failed %7.1f s", name, len(r.items), failed, r.seconds)
    summary = {"suites": [dict(zip(("suite", "items", "failed", "seconds"), row)) for row in rows],
               "seconds": round(time.perf_counter() - t0, 1)}
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    log.info("total %.1f s, reports in %s", summary["seconds"], args.out)
    return 0 if all(f == 0 for _, _, f, _ in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
