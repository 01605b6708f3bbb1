"""Command line entry point: ``irratio check | suite | classes``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import irrationality as I
from .grammar import SpecError, build, parse_group_spec
from .group import BudgetExceeded
from .suites import SUITES, VERSION, SuiteResult, UnknownSuite, run_suite, witness_dict

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def emit_report(result: SuiteResult, fmt: str = "json", timing: bool = True) -> str:
    d = result.as_dict()
    if not timing:
        for it in d["items"]:
            it.pop("millis", None)
    if fmt == "json":
        return json.dumps(d, indent=2)
    lines = [f"suite {d['suite']}: {'PASS' if d['pass'] else 'FAIL'}"]
    for it in d["items"]:
        flag = "ok  " if it["pass"] else ("skip" if "skipped" in it else "FAIL")
        lines.append(f"  [{flag}] {it['spec']}: {it['desc']}")
        if not it["pass"]:
            lines.append(f"         expected {it['expected']!r}, observed {it['observed']!r}")
        if "skipped" in it:
            lines.append(f"         {it['skipped']}")
        if "witness" in it:
            w = it["witness"]
            lines.append(f"         witness g x g^-1 = x^{w['k']}: x = {w['x']}, g = {w['g']}")
    return "\n".join(lines)


def _parse_primes(text: str | None):
    if not text:
        return None
    try:
        return sorted({int(p) for p in text.split(",") if p.strip()})
    except ValueError:
        raise SpecError(f"bad prime list {text!r}") from None


def cmd_check(args) -> int:
    G = build(parse_group_spec(args.spec))
    G.enumerate(args.max_order)
    if args.pi and args.pi.strip() == "2'":
        primes = I.odd_primes(G)
    else:
        primes = _parse_primes(args.pi)
    verdict = I.is_irrational(G) if primes is None else I.is_pi_irrational(G, primes)
    report = I.irrationality_report(G)
    out = {
        "spec": G.spec,
        "order": G.order,
        "pi": list(verdict.primes),
        "verdict": bool(verdict),
        "per_prime": {str(p): v for p, v in report["per_prime"].items()},
        "classes": [r.as_dict() for r in report["rows"]],
        "version": VERSION,
    }
    w = witness_dict(G, verdict.witness)
    if w is not None:
        out["witness"] = w
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"{G.spec}: order {G.order}, {len(report['rows'])} classes")
        _print_rows(report["rows"])
        label = "irrational" if primes is None else "pi-irrational for pi = {" + ",".join(map(str, verdict.primes)) + "}"
        print(f"{label}: {'yes' if verdict else 'no'}")
        if w is not None:
            print(f"witness: g x g^-1 = x^{w['k']} with x = {w['x']}, g = {w['g']}")
    return EXIT_PASS if verdict else EXIT_FAIL


def _print_rows(rows):
    print(f"{'#':>4} {'order':>6} {'size':>8} {'deg':>4} {'real':>5}  B")
    for i, r in enumerate(rows):
        print(f"{i:>4} {r.order:>6} {r.class_size:>8} {r.field_degree:>4} {str(r.real):>5}  {list(r.units)}")


def cmd_classes(args) -> int:
    G = build(parse_group_spec(args.spec))
    G.enumerate(args.max_order)
    report = I.irrationality_report(G)
    if args.format == "json":
        print(json.dumps({"spec": G.spec, "order": G.order,
                          "classes": [r.as_dict() for r in report["rows"]], "version": VERSION}, indent=2))
    else:
        print(f"{G.spec}: order {G.order}, {len(report['rows'])} classes")
        _print_rows(report["rows"])
        print("representatives:")
        for i, r in enumerate(report["rows"]):
            print(f"{i:>4} {r.representative}")
    return EXIT_PASS


def cmd_suite(args) -> int:
    names = list(SUITES) if args.name == "all" else [args.name]
    results = [run_suite(n, seed=args.seed) for n in names]
    timing = not args.no_timing
    if args.format == "json":
        if len(results) == 1:
            print(emit_report(results[0], "json", timing))
        else:
            payload = [json.loads(emit_report(r, "json", timing)) for r in results]
            print(json.dumps({"suites": payload, "pass": all(r.passed for r in results), "version": VERSION},
                             indent=2))
    else:
        for r in results:
            print(emit_report(r, "text", timing))
    return EXIT_PASS if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irratio", description="Irrationality checks for finite groups")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-order", type=int, default=None,
                       help="element budget per enumeration (default: $IRRATIO_MAX_ORDER or 500000)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="decide (pi-)irrationality of a group")
    p.add_argument("spec")
    p.add_argument("--pi", default=None, help="comma separated primes, e.g. 2,3, or 2' for all odd primes")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classes", help="list conjugacy classes with power orbits")
    p.add_argument("spec")
    common(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name", help="suite name or 'all'; one of: " + ", ".join(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true", help="drop millis fields for byte-stable output")
    common(p)
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    if args.max_order is not None:
        os.environ["IRRATIO_MAX_ORDER"] = str(args.max_order)
    try:
        return args.func(args)
    except (SpecError, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
