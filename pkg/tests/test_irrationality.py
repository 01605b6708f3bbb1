import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import primefactors, totient

from irratio import irrationality as I
from irratio import structure as S
from irratio.grammar import build
from irratio.group import parse_perm
from irratio.products import direct_product

SMALL = ["symmetric(3)", "symmetric(4)", "alternating(4)", "alternating(5)", "dihedral(8)", "quaternion(8)",
         "singer_frobenius(3)", "singer_frobenius(7)", "extraspecial(3,1)", "metacyclic(7,3,2)",
         "minimal_nonabelian_qp(5,3,1)", "suzuki_2group(8)", "psl(2,7)", "psl(2,8)", "gl(2,3)",
         "elementary_abelian(2,3)", "cyclic(12)", "psu3_unipotent_even(4)"]


def test_s3_power_orbit():
    G = build("symmetric(3)")
    orbit = I.power_orbit(G, parse_perm("(1 2 3)", 3))
    assert orbit.units == (1, 2) and orbit.field_degree == 1
    assert not orbit.trivial


def test_cyclic_orbits_are_trivial():
    G = build("cyclic(12)")
    for x in G.elements:
        o = I.power_orbit(G, x)
        assert o.units == (1,) and o.field_degree == int(totient(o.order))


def test_dihedral_witness():
    D = build("dihedral(8)")
    v = I.is_irrational(D)
    assert not v
    w = v.witness
    assert w.holds(D) and D.element_order(w.x) == 4 and w.k == 3
    assert D.fmt(w.x) == "(1 2 3 4)"


def test_involutions_never_witness():
    # order <= 2 elements are skipped: every elementary abelian 2-group is irrational
    assert bool(I.is_irrational(build("elementary_abelian(2,4)")))
    assert bool(I.is_irrational(build("symmetric(2)")))


@pytest.mark.parametrize("spec", SMALL)
def test_monotone_in_pi(spec):
    G = build(spec)
    primes = primefactors(G.order)
    verdicts = {sub: bool(I.is_pi_irrational(G, sub))
                for r in range(len(primes) + 1) for sub in itertools.combinations(primes, r)}
    for a, va in verdicts.items():
        for b, vb in verdicts.items():
            if set(a) <= set(b) and vb:
                assert va
    assert verdicts[()] is True
    assert verdicts[tuple(primes)] == bool(I.is_irrational(G))


@pytest.mark.parametrize("spec", SMALL)
def test_inherited_by_subgroups(spec):
    G = build(spec)
    rng = random.Random(7)
    for primes in ([p] for p in primefactors(G.order)):
        if not I.is_pi_irrational(G, primes):
            continue
        for _ in range(4):
            H = G.subgroup(rng.sample(G.elements, 2)).as_group()
            assert bool(I.is_pi_irrational(H, primes))


@pytest.mark.parametrize("a,b", [("extraspecial(3,1)", "elementary_abelian(2,2)"),
                                 ("symmetric(3)", "cyclic(5)"),
                                 ("minimal_nonabelian_qp(2,3,1)", "quaternion(8)"),
                                 ("cyclic(4)", "singer_frobenius(5)")])
def test_direct_products(a, b):
    A, B = build(a), build(b)
    D = direct_product(A, B)
    assert bool(I.is_irrational(D)) == (bool(I.is_irrational(A)) and bool(I.is_irrational(B)))


@pytest.mark.parametrize("spec", SMALL)
def test_no_real_pi_elements_of_order_above_two(spec):
    G = build(spec)
    cl = G.classes()
    for p in primefactors(G.order):
        if I.is_p_irrational(G, p):
            for c, r in enumerate(cl.reps):
                n = int(cl.rep_orders[c])
                if n > 2 and primefactors(n) == [p]:
                    assert not S.is_real(G, G.elements[r])


@settings(max_examples=len(SMALL), deadline=None)
@given(st.sampled_from(SMALL))
def test_oracle_agrees(spec):
    G = build(spec)
    agree, total = I.crosscheck_all(G)
    assert agree == total == len(G.classes().reps)
    for r in G.classes().reps[:10]:
        x = G.elements[r]
        assert I.crosscheck_nc(G, x) == (I.power_orbit(G, x).units == (1,))


def test_report_rows():
    rep = I.irrationality_report(build("cyclic(6)"))
    assert len(rep["rows"]) == 6 and rep["irrational"]
    rep = I.irrationality_report(build("suzuki(8)"))
    assert len(rep["rows"]) == 11
    assert rep["per_prime"] == {2: True, 5: False, 7: False, 13: False}
    assert set(rep["rows"][0].as_dict()) == {"rep", "order", "class_size", "B", "field_degree", "real"}


def test_two_prime_set():
    G = build("symmetric(4)")
    assert I.odd_primes(G) == [3]
    assert not I.is_2prime_irrational(G)
    assert bool(I.is_2prime_irrational(build("suzuki_2group(8)")))
