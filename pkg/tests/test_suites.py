import pytest

from irratio.grammar import build
from irratio import irrationality as I
from irratio import structure as S
from irratio.suites import (
    CATALOG,
    SUITES,
    UnknownSuite,
    metacyclic_grid,
    run_suite,
    sg16_candidates,
    sg16_winners,
)

OTHER = ["three_irrational_simple", "prop_collapse_metacyclic", "prop_collapse_supersolvable_certified",
         "squarefree_nilpotent", "p3_groups"]


@pytest.mark.parametrize("name", OTHER)
def test_other_suites_pass(name, suite_results):
    r = suite_results[name]
    bad = [(it.spec, it.expected, it.observed) for it in r.items if not (it.passed or it.optional)]
    assert r.passed, bad


def test_every_item_records_a_spec(suite_results):
    for r in suite_results.values():
        for it in r.items:
            assert it.spec
            assert it.passed == (it.skipped is None and it.expected == it.observed)


def test_catalog_is_large_enough():
    assert len(CATALOG) >= 25 and len(set(CATALOG)) == len(CATALOG)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_metacyclic_grid_is_deduplicated():
    grid = metacyclic_grid(max_n=20, max_m=6)
    assert len(set(grid)) == len(grid)
    for n, m, k in grid:
        assert pow(k, m, n) == 1 % n


def test_metacyclic_collapse_small():
    for n, m, k in metacyclic_grid(max_n=15, max_m=6, max_order=90):
        G = build(f"metacyclic({n},{m},{k})")
        if bool(I.is_irrational(G)):
            assert S.is_abelian(G)


def test_sixteen_search():
    cands = sg16_candidates()
    winners = sg16_winners()
    assert winners and set(winners) <= set(cands)
    for spec in winners:
        G = build(spec)
        assert G.order == 16 and bool(I.is_irrational(G))


def test_suite_names_are_stable():
    assert list(SUITES)[:3] == ["catalog_orders", "thm_2simple_psl", "thm_2simple_witnesses"]
