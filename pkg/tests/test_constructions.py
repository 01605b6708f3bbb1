import pytest

from irratio import constructions as C
from irratio import irrationality as I
from irratio import structure as S
from irratio.field import make_field, parse_poly, companion_matrix
from irratio.grammar import build
from irratio.products import ActionMap

ORDERS = {
    "cyclic(1)": 1,
    "dihedral(8)": 8,
    "quaternion(16)": 16,
    "symmetric(5)": 120,
    "alternating(6)": 360,
    "psl(2,5)": 60,
    "psl(2,8)": 504,
    "gl(2,3)": 48,
    "sl(3,3)": 5616,
    "su(3,3)": 6048,
    "psp(4,3)": 25920,
    "suzuki_2group(8)": 64,
    "psu3_unipotent_even(4)": 64,
    "singer_frobenius(3)": 12,
    "singer_frobenius(5)": 80,
    "singer_frobenius(7)": 56,
    "extraspecial(5,1)": 125,
    "extraspecial(3,2)": 243,
    "minimal_nonabelian_p(2,1,1)": 8,
    "minimal_nonabelian_p(3,2,1)": 81,
    "minimal_nonabelian_qp(2,3,1)": 12,
    "minimal_nonabelian_qp(5,3,1)": 75,
    "minimal_nonabelian_qp(3,5,1)": 405,
    "metacyclic(7,3,2)": 21,
    "regular_module_extension(cyclic(3),5)": 375,
}


@pytest.mark.parametrize("spec,order", ORDERS.items())
def test_orders(spec, order):
    assert build(spec).order == order


def test_dihedral8():
    D = build("dihedral(8)")
    assert not S.is_abelian(D) and S.exponent(D) == 4 and S.is_nilpotent(D)


def test_classical_closed_forms():
    for fam, n, q in (("PSL", 2, 7), ("SL", 2, 5), ("GL", 2, 4), ("Sp", 4, 2), ("PSU", 3, 3)):
        assert build(f"{fam.lower()}({n},{q})").order == C.classical_order(fam, n, q)


def test_su33_center_trivial():
    assert S.center(build("su(3,3)")).order == 1


def test_singer_is_a4_for_m3():
    G = build("singer_frobenius(3)")
    assert len(G.classes().reps) == 4 and S.derived_subgroup(G).order == 4


def test_singer_rejects_even():
    with pytest.raises(ValueError):
        C.singer_frobenius(4)


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
def test_extraspecial(p, n):
    G = C.extraspecial(p, n)
    Z = S.center(G)
    assert Z.order == p and S.derived_subgroup(G) == Z
    assert S.exponent(G) == p
    assert bool(I.is_irrational(G))


def test_extraspecial_rejects_two():
    with pytest.raises(ValueError):
        C.extraspecial(2, 1)


def test_minimal_nonabelian_p_relations():
    for args in ((2, 1, 1), (3, 1, 1), (3, 2, 1), (5, 1, 1)):
        G = C.minimal_nonabelian_p(*args)
        p, r, s = args
        assert G.order == p ** (r + s + 1)
        assert S.derived_subgroup(G).order == p
        assert S.center(G).order == G.order // p**2


def test_minimal_nonabelian_qp_small():
    G = C.minimal_nonabelian_qp(2, 3, 1)
    A4 = build("alternating(4)")
    assert G.order == 12 and len(G.classes().reps) == len(A4.classes().reps) == 4
    assert sorted(G.orders().tolist()) == sorted(A4.orders().tolist())


def test_minimal_nonabelian_qp_rejects_r1():
    # ord_3(7) = 1
    with pytest.raises(ValueError):
        C.minimal_nonabelian_qp(7, 3, 1)


def test_metacyclic():
    assert S.is_abelian(C.metacyclic(6, 4, 1))
    G = C.metacyclic(7, 3, 2)
    v = I.is_irrational(G)
    assert not v and v.witness.k == 2 and v.witness.holds(G)
    M = C.metacyclic(9, 3, 4)
    assert M.order == 27 and S.exponent(M) == 9 and not I.is_irrational(M)
    with pytest.raises(ValueError):
        C.metacyclic(7, 3, 3)


def test_regular_module_guards():
    with pytest.raises(ValueError):
        C.regular_module_extension(C.cyclic(3), 7)  # 7 = 1 mod 3
    R = C.regular_module_extension(C.cyclic(1), 5)
    assert R.order == 5


def test_matrix_module_extension():
    F = make_field(5)
    coeffs, _ = parse_poly("x^2+x+1@5")
    M = companion_matrix(coeffs, F)
    G = C.matrix_module_extension(C.cyclic(3), [M], 5)
    assert G.order == 75 and bool(I.is_irrational(G))
    with pytest.raises(ValueError):
        C.matrix_module_extension(C.cyclic(6), [M], 5)


def test_psu3_witness():
    A, B, zeta, xi = C.psu3_witness(4)
    U = build("psu3_unipotent_even(4)")
    assert U.element_order(A) == 4
    assert U.conjugate(U.inv(B), A) == U.inv(A)


def test_winter_parameters():
    with pytest.raises(TypeError):
        C.winter_extension(C.cyclic(3), 5)


def test_suzuki_2group():
    P = C.suzuki_2group(8)
    assert P.order == 64 and S.exponent(P) == 4
    assert S.center(P).order == 8
