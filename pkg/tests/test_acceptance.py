"""Acceptance checks, one per criterion, evaluated on a single run of every suite.

Run with pytest, or directly as ``python3 tests/test_acceptance.py`` to print
just the criterion lines.  All comparisons are exact.
"""
import sys
import time

import pytest

from irratio.grammar import build
from irratio.suites import ORACLE, SUITES, run_suite

WINTER = "winter_extension(cyclic_perm(3),5)"
WINTER_SECONDS = 90.0

# items of the witness suite that reproduce explicit matrices rather than verdicts
_MATRIX_WITNESS_MARKERS = ("s, t", "A = M(1,zeta)", "every M(x,y)")


def _is_matrix_witness(item):
    return any(m in item.desc for m in _MATRIX_WITNESS_MARKERS)


def _items(results, *names, where=None):
    out = []
    for n in names:
        out += [it for it in results[n].items if where is None or where(it)]
    return out


def _verdict(items, extra=""):
    bad = [it for it in items if not (it.passed or it.optional)]
    ok = not bad and bool(items)
    msg = f"{len(items) - len(bad)}/{len(items)} items hold"
    if bad:
        shown = "; ".join(f"{it.spec}: expected {it.expected!r}, observed {it.observed!r}" for it in bad[:3])
        msg += f"; failing: {shown}"
    if extra:
        msg += f"; {extra}"
    return ok, msg


def _group_items(items):
    # the oracle rows are bookkeeping, not group checks
    return [it for it in items if not it.desc.startswith("B = {1} iff")]


def c1(results):
    return _verdict(_items(results, "catalog_orders"))


def c2(results):
    items = _items(results, "thm_2simple_psl", "thm_2simple_sz_j1")
    items += _items(results, "thm_2simple_witnesses", where=lambda it: not _is_matrix_witness(it))
    return _verdict(items)


def c3(results):
    return _verdict(_items(results, "thm_2simple_witnesses", where=_is_matrix_witness))


def c4(results):
    items = _group_items(_items(results, "lem_sylow2irr"))
    return _verdict(items + [_count_item(len(items), 25, "catalog size")])


def c5(results):
    return _verdict(_items(results, "bound_lemma", "smallgroup16_search"))


def c6(results):
    items = _group_items(_items(results, "lem_pinormal"))
    return _verdict(items + [_count_item(len(items), 10, "certified pairs")])


def c7(results):
    return _verdict(_items(results, "thm_main_consequences"))


def c8(results):
    return _verdict(_items(results, "thm_pirr_consequences"))


def c9(results):
    items = _items(results, "fitting_escalation", "winter_nonabelian_sylow", "wreath_counterexample")
    G = build(WINTER)  # uncached, so the enumeration is timed from scratch
    t = time.perf_counter()
    G.enumerate()
    secs = time.perf_counter() - t
    timing = _Synthetic(f"fresh enumeration of {WINTER} within {WINTER_SECONDS:.0f} s", WINTER,
                        True, secs <= WINTER_SECONDS)
    return _verdict(items + [timing], f"enumerated {G.order} elements in {secs:.1f} s")


def c10(results):
    return _verdict(_items(results, "prop_frobenius"))


def c11(results):
    return _verdict(_items(results, "minimal_nonabelian"))


def c12(results):
    subs = _items(results, "desk_scale_substitutions")
    flagged = [it for it in subs if it.skipped and it.optional and not it.passed]
    stand_ins = [_Synthetic(f"substitute suite {n} passes", n, True, results[n].passed)
                 for n in ("lem_sylow2irr", "bound_lemma", "thm_2simple_witnesses")]
    marked = _Synthetic("every out-of-scope item is reported as skipped", "-", len(subs), len(flagged))
    return _verdict([marked] + stand_ins, f"{len(flagged)} items flagged skipped")


def c13(results):
    agree = sum(a for a, _ in ORACLE.values())
    total = sum(t for _, t in ORACLE.values())
    items = [
        _Synthetic("power-orbit criterion agrees with the N = C scan", "all", total, agree),
        _count_item(total, 10**4, "class representatives"),
    ]
    return _verdict(items, f"{agree}/{total} representatives agree over {len(ORACLE)} groups")


class _Synthetic:
    def __init__(self, desc, spec, expected, observed):
        self.desc, self.spec, self.expected, self.observed = desc, spec, expected, observed
        self.passed = expected == observed
        self.optional = False


def _count_item(n, floor, what):
    return _Synthetic(f"at least {floor} {what}", "-", True, n >= floor)


CRITERIA = [
    (1, "closed-form orders of the simple and classical groups", c1),
    (2, "2-irrationality verdicts for the simple groups, with witnesses", c2),
    (3, "explicit matrix witnesses (D_8 in SL(3,3); A^B = A^-1 in the unitary 2-group)", c3),
    (4, "2-irrational iff the Sylow 2-subgroup is irrational, over the catalog", c4),
    (5, "2^d <= s+1 and |Omega| >= |P/Phi| for irrational 2-groups", c5),
    (6, "pi-irrationality passes to G/N for a normal pi'-subgroup N", c6),
    (7, "normal Sylow 2 and elementary abelian involution subgroup", c7),
    (8, "simple groups are not p-irrational for p >= 5", c8),
    (9, "module extensions: irrational, Fitting length 2; wreath counterexample", c9),
    (10, "irrational Frobenius groups", c10),
    (11, "minimal non-abelian families: irrational, pairs generate", c11),
    (12, "out-of-scope items flagged skipped, substitutes pass", c12),
    (13, "class-representative oracle agreement", c13),
]


def format_line(num, label, ok, msg):
    return f"criterion {num} [{'PASS' if ok else 'FAIL'}] {label}: {msg}"


@pytest.mark.parametrize("num,label,fn", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(num, label, fn, suite_results, acceptance_log):
    ok, msg = fn(suite_results)
    line = format_line(num, label, ok, msg)
    print(line)
    acceptance_log.append(line)
    assert ok, line


def main():
    t = time.perf_counter()
    results = {name: run_suite(name, seed=0) for name in SUITES}
    all_ok = True
    for num, label, fn in CRITERIA:
        ok, msg = fn(results)
        all_ok &= ok
        print(format_line(num, label, ok, msg), flush=True)
    print(f"total {time.perf_counter() - t:.0f} s")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
