import itertools

import pytest
from hypothesis import given, settings, strategies as st

from irratio.field import (
    MAX_FIELD_SIZE,
    companion_matrix,
    element_of_order,
    format_poly,
    frobenius,
    lowest_irreducible,
    make_field,
    minimal_polynomial,
    parse_poly,
    primitive_element,
    solve_artin_schreier,
)
from irratio import matrices

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3), (2, 6)]


def _divides(d, m, p):
    # naive long division of m by monic d over Z/p
    r = list(m)
    for shift in range(len(r) - len(d), -1, -1):
        c = r[shift + len(d) - 1] % p
        if c:
            for i, di in enumerate(d):
                r[shift + i] = (r[shift + i] - c * di) % p
    return not any(x % p for x in r)


def brute_lowest_irreducible(p, k):
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        m = low + [1]
        reducible = False
        for deg in range(1, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=deg):
                if _divides(list(tail) + [1], m, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(m)


@pytest.mark.parametrize("p,k", [(2, 4), (5, 2), (3, 3), (2, 2), (2, 3), (7, 2), (3, 4)])
def test_modulus_matches_brute_force_scan(p, k):
    assert lowest_irreducible(p, k) == brute_lowest_irreducible(p, k)


def test_pinned_moduli():
    assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert make_field(5, 2).modulus == (2, 0, 1)
    assert make_field(3, 3).modulus == (1, 2, 0, 1)


def test_gf16_product():
    F = make_field(2, 4)
    X = F.gen
    assert X * X**3 == F([1, 1])


def test_invalid_parameters():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(2, 21)
    assert 2**20 == MAX_FIELD_SIZE


def _elem(F):
    return st.integers(0, F.q - 1).map(F.from_code)


@st.composite
def field_and_elements(draw, n=3):
    p, k = draw(st.sampled_from(FIELDS))
    F = make_field(p, k)
    return F, [draw(_elem(F)) for _ in range(n)]


@settings(max_examples=200, deadline=None)
@given(field_and_elements())
def test_field_axioms(data):
    F, (a, b, c) = data
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a + (-a) == F.zero
    if a != F.zero:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b
        assert a ** (F.q - 1) == F.one


@settings(max_examples=100, deadline=None)
@given(field_and_elements(2), st.integers(0, 6))
def test_frobenius_is_multiplicative_and_additive(data, i):
    F, (a, b) = data
    assert frobenius(a * b, i) == frobenius(a, i) * frobenius(b, i)
    assert frobenius(a + b, i) == frobenius(a, i) + frobenius(b, i)
    assert frobenius(a, F.k) == a


@pytest.mark.parametrize("p,k", FIELDS)
def test_frobenius_has_order_k(p, k):
    F = make_field(p, k)
    g = primitive_element(F)
    images = [frobenius(g, i) for i in range(k)]
    assert len(set(int(x) for x in images)) == k
    assert frobenius(g, k) == g


@pytest.mark.parametrize("p,k", FIELDS)
def test_element_of_order(p, k):
    F = make_field(p, k)
    for n in (d for d in range(1, F.q) if (F.q - 1) % d == 0):
        assert element_of_order(F, n).order() == n
    with pytest.raises(ValueError):
        element_of_order(F, F.q)


def test_minimal_polynomial_of_cube_root_of_unity():
    F = make_field(2, 2)
    w = element_of_order(F, 3)
    assert minimal_polynomial(w) == [1, 1, 1]


def test_companion_matrix():
    F = make_field(5)
    coeffs, p = parse_poly("x^2+x+1@5")
    M = companion_matrix(coeffs, F)
    assert M == ((0, 4), (1, 4))
    m = matrices.from_rows(M, F)
    cube = matrices.mat_mul(matrices.mat_mul(m, m, F, 2), m, F, 2)
    assert cube == matrices.identity(2)
    assert m != matrices.identity(2)


def test_artin_schreier():
    F = make_field(2, 4)
    y = solve_artin_schreier(F, F.one)
    assert y**4 + y == F.one
    # the image of y -> y^4 + y is GF(4), so anything outside it has no solution
    bad = next(c for c in F.elements() if c != F.zero and (c**4 + c) != F.zero)
    with pytest.raises(ValueError):
        solve_artin_schreier(F, bad)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_poly_text_roundtrip(p, raw):
    coeffs = [c % p for c in raw] + [1]
    assert parse_poly(format_poly(coeffs, p)) == (coeffs, p)


def test_poly_requires_modulus():
    with pytest.raises(ValueError):
        parse_poly("x^2+1")
