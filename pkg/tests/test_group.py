import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from irratio import constructions as C
from irratio import structure as S
from irratio.field import make_field
from irratio.grammar import build
from irratio.group import (
    BudgetExceeded,
    MatrixGroup,
    NotNormal,
    PermGroup,
    canonical_projective,
    format_perm,
    parse_perm,
)
from irratio.products import (
    ActionMap,
    central_product,
    direct_product,
    quotient_group,
    semidirect_product,
    trivial_action,
    wreath_product,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(n)))).map(tuple)


@settings(max_examples=200, deadline=None)
@given(perms)
def test_perm_text_roundtrip(p):
    assert parse_perm(format_perm(p), len(p)) == p


def test_parse_perm_rejects_overlap():
    with pytest.raises(ValueError):
        parse_perm("(1 2)(2 3)")


@pytest.mark.parametrize("spec", ["psl(2,7)", "quaternion(8)", "suzuki_2group(8)", "metacyclic(7,3,2)"])
def test_sampled_associativity_and_inverses(spec):
    G = build(spec)
    rng = random.Random(1)
    e = G.elements
    for _ in range(300):
        a, b, c = (rng.choice(e) for _ in range(3))
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        assert G.mul(a, G.inv(a)) == G.identity
        assert G.mul(G.identity, a) == a


def test_index_tables_match_the_law():
    G = build("symmetric(4)")
    e = G.elements
    inv = G.inverse_table()
    for i, x in enumerate(e):
        assert e[inv[i]] == G.inv(x)
        for j in (1, 5, 17):
            assert e[G.right_table(j)[i]] == G.mul(x, e[j])
    conj = G.conjugates_by_all(7)
    assert all(e[conj[g]] == G.conjugate(e[g], e[7]) for g in range(G.order))


def test_budget():
    G = build("psl(2,13)")
    with pytest.raises(BudgetExceeded):
        G.enumerate(100)


def test_psl27_order():
    assert build("psl(2,7)").order == 168


def test_generator_order_does_not_change_the_group():
    S4 = C.symmetric(4)
    H = PermGroup(4, list(reversed(S4.generators)))
    assert set(H.elements) == set(S4.elements)


@pytest.mark.parametrize("spec", ["symmetric(4)", "dihedral(16)", "psu3_unipotent_even(4)"])
def test_quotient_order(spec):
    G = build(spec)
    for N in (S.derived_subgroup(G), S.center(G)):
        Q = quotient_group(G, N)
        assert Q.order * N.order == G.order


def test_quotient_needs_normal_subgroup():
    G = build("symmetric(3)")
    with pytest.raises(NotNormal):
        quotient_group(G, G.subgroup([parse_perm("(1 2)", 3)]))


def test_semidirect_with_trivial_action_is_direct():
    A, H = C.cyclic(6), C.dihedral(8)
    SD = semidirect_product(A, H, trivial_action(H, A))
    D = direct_product(A, H)
    assert SD.order == D.order == 48
    assert len(SD.classes().reps) == len(D.classes().reps)
    assert S.is_abelian(SD) is False and S.center(SD).order == S.center(D).order


def test_invalid_action_rejected():
    A, H = C.elementary_abelian(5, 2), C.cyclic(3)
    with pytest.raises(ValueError):
        ActionMap(H, A, images=[((1, 1), (0, 1))])  # order 5, not 3


def test_canonical_projective_is_idempotent():
    F = make_field(7)
    scalars = [1, 6]
    rng = random.Random(3)
    for _ in range(50):
        m = tuple(rng.randrange(7) for _ in range(4))
        c = canonical_projective(m, scalars, F)
        assert canonical_projective(c, scalars, F) == c
        assert c == canonical_projective(tuple((6 * x) % 7 for x in m), scalars, F)


def test_projective_group_quotients_by_scalars():
    F = make_field(5)
    gens = [((1, 1), (0, 1)), ((0, 4), (1, 0))]
    SL = MatrixGroup(F, 2, gens)
    PSL = MatrixGroup(F, 2, gens, scalars=[1, 4])
    assert SL.order == 120 and PSL.order == 60


def test_wreath_of_quaternion():
    assert wreath_product(C.quaternion(8), C.cyclic_perm(2)).order == 128


def test_central_products():
    C4 = C.cyclic(4)
    G = central_product(C4, C.cyclic(4), {(0,): (0,), (2,): (2,)})
    assert G.order == 8 and S.is_abelian(G)
    D = C.dihedral(8)
    z = next(x for x in S.center(D).elements if x != D.identity)
    DC = central_product(D, C4, {D.identity: (0,), z: (2,)})
    assert DC.order == 16 and S.center(DC).order == 4
    assert build("central_product(quaternion(8),dihedral(8))").order == 32


def test_normal_closure_examples():
    D = build("dihedral(8)")
    refl = next(x for x in D.elements if D.element_order(x) == 2 and x not in S.center(D))
    assert S.normal_closure(D, [refl]).order == 4
    A4 = build("alternating(4)")
    assert S.normal_closure(A4, [parse_perm("(1 2 3)", 4)]).order == 12


def test_classes_partition():
    G = build("psl(2,8)")
    cl = G.classes()
    assert int(cl.sizes.sum()) == G.order
    assert cl.sizes[cl.labels[0]] == 1
    assert all(G.order % int(s) == 0 for s in cl.sizes)
    assert np.all(cl.labels[cl.reps] == np.arange(len(cl.reps)))
