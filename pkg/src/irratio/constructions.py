"""Catalog of the concrete group families used by the verification suites.

Every constructor returns an un-enumerated :class:`~irratio.group.Group`
whose ``spec`` is the canonical constructor text understood by the CLI
parser, so ``parse_group_spec(G.spec)`` rebuilds ``G``.
"""
from __future__ import annotations

import functools
import json
import math
from importlib import resources

from sympy import isprime, n_order

from . import matrices
from .field import (
    companion_matrix,
    element_of_order,
    field_of_order,
    make_field,
    minimal_polynomial,
    primitive_element,
    solve_artin_schreier,
)
from .group import Group, LawGroup, MatrixGroup, PermGroup, VectorGroup
from .products import (
    ActionMap,
    Automorphism,
    DirectProduct,
    SemidirectProduct,
    matrix_aut,
)

# -- basic families ----------------------------------------------------------


def cyclic(n: int) -> VectorGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return VectorGroup((n,), spec=f"cyclic({n})")


def abelian(*ns: int) -> VectorGroup:
    if not ns or any(n < 1 for n in ns):
        raise ValueError("abelian group needs positive invariants")
    return VectorGroup(ns, spec="abelian(" + ",".join(map(str, ns)) + ")")


def elementary_abelian(p: int, d: int) -> VectorGroup:
    if not isprime(p) or d < 0:
        raise ValueError("elementary abelian group needs a prime and d >= 0")
    return VectorGroup((p,) * d, spec=f"elementary_abelian({p},{d})")


def cyclic_perm(n: int) -> PermGroup:
    """C_n as the regular permutation group on n points."""
    if n < 1:
        raise ValueError("need n >= 1")
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))], spec=f"cyclic_perm({n})")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    gens = []
    if n >= 2:
        gens.append(tuple((i + 1) % n for i in range(n)))
        gens.append(tuple([1, 0] + list(range(2, n))))
    return PermGroup(n, gens, spec=f"symmetric({n})")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("need n >= 1")
    gens = []
    for i in range(2, n):
        img = list(range(n))
        img[0], img[1], img[i] = 1, i, 0
        gens.append(tuple(img))
    return PermGroup(n, gens, spec=f"alternating({n})")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (2n), acting on n points."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and >= 2")
    n = order // 2
    spec = f"dihedral({order})"
    if n == 1:
        return PermGroup(2, [(1, 0)], spec=spec)
    if n == 2:
        return PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)], spec=spec)
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref], spec=spec)


def quaternion(order: int) -> LawGroup:
    """Generalised quaternion group of 2-power order >= 8.

    Elements (a, b) stand for x^a y^b with x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1.
    """
    if order < 8 or order & (order - 1):
        raise ValueError("quaternion order must be a power of 2, at least 8")
    m = order // 2
    n = m // 2

    def mul(u, v):
        a, b = u
        c, d = v
        if b == 0:
            return ((a + c) % m, d)
        if d == 0:
            return ((a - c) % m, 1)
        return ((a - c + n) % m, 0)

    def inv(u):
        a, b = u
        return ((-a) % m, 0) if b == 0 else ((a + n) % m, 1)

    return LawGroup((0, 0), mul, inv, [(1, 0), (0, 1)], spec=f"quaternion({order})")


# -- classical groups --------------------------------------------------------


def _transvection(d, i, j, a):
    m = list(matrices.identity(d))
    m[i * d + j] = a
    return tuple(m)


def _field_basis(F):
    return [int(F.gen**e) for e in range(F.k)]


def _psp_scalars(F):
    return [1, F.neg_table[1]]


def _symplectic_gram(F, n):
    m = n // 2
    g = [0] * (n * n)
    for i in range(m):
        g[i * n + m + i] = 1
        g[(m + i) * n + i] = F.neg_table[1]
    return tuple(g)


def _unitary_form_holds(M, F, d, q):
    """M^T J M^(q) = J for the antidiagonal Hermitian form J over F_{q^2}."""
    J = tuple(1 if i + j == d - 1 else 0 for i in range(d) for j in range(d))
    frob = F.frobenius_table(F.k // 2)
    mul = matrices.make_mul(F, d)
    lhs = mul(mul(matrices.transpose(M, d), J), matrices.entrywise(M, frob))
    return lhs == J


def _greedy_generators(G_mul, identity, candidates):
    """Short generating list for the group generated by ``candidates``."""
    chosen, span = [], {identity}
    for c in candidates:
        if c in span:
            continue
        chosen.append(c)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in chosen:
                    y = G_mul(x, g)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return chosen


def _su3_generators(F, q):
    """Unitary lower and upper unitriangular matrices generating SU(3, q)."""
    d = 3
    mul = matrices.make_mul(F, d)
    lower, upper = [], []
    for x in range(F.q):
        for z in range(F.q):
            for y in range(F.q):
                lo = (1, 0, 0, x, 1, 0, y, z, 1)
                if _unitary_form_holds(lo, F, d, q):
                    lower.append(lo)
                    upper.append(matrices.transpose(lo, d))
    upper = [u for u in upper if _unitary_form_holds(u, F, d, q)]
    ident = matrices.identity(d)
    return _greedy_generators(mul, ident, lower) + _greedy_generators(mul, ident, upper)


CLASSICAL_FAMILIES = ("GL", "SL", "PSL", "SU", "PSU", "Sp", "PSp")


def classical(family: str, n: int, q: int) -> MatrixGroup:
    """Classical matrix group over GF(q) (GF(q^2) for the unitary families)."""
    fam = {f.lower(): f for f in CLASSICAL_FAMILIES}.get(family.lower())
    if fam is None:
        raise ValueError(f"unknown classical family {family!r}")
    spec = f"{fam.lower()}({n},{q})"
    if fam in ("GL", "SL", "PSL"):
        F = field_of_order(q)
        gens = []
        for i in range(n - 1):
            for a in _field_basis(F):
                gens.append(_transvection(n, i, i + 1, a))
                gens.append(_transvection(n, i + 1, i, a))
        if fam == "GL":
            w = int(primitive_element(F))
            gens.append(tuple(w if (i == j == 0) else (1 if i == j else 0) for i in range(n) for j in range(n)))
        scalars = None
        if fam == "PSL":
            scalars = [lam for lam in range(1, F.q) if int(F.from_code(lam) ** n) == 1]
        if n == 1:
            gens = gens or [matrices.identity(1)]
        return MatrixGroup(F, n, gens, scalars=scalars, spec=spec)
    if fam in ("Sp", "PSp"):
        if n % 2 or n < 2:
            raise ValueError("symplectic groups need even dimension")
        F = field_of_order(q)
        gram = _symplectic_gram(F, n)
        gens = []
        basis = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        vecs = list(basis)
        m = n // 2
        for i in range(m):
            for j in range(m):
                if i != j:
                    vecs.append(tuple(1 if k in (i, m + j) else 0 for k in range(n)))
                    vecs.append(tuple(1 if k in (i, j) else 0 for k in range(n)))
        for v in vecs:
            for a in _field_basis(F):
                gens.append(_symplectic_transvection(F, n, gram, v, a))
        scalars = _psp_scalars(F) if fam == "PSp" else None
        return MatrixGroup(F, n, gens, scalars=scalars, spec=spec)
    # unitary
    if n != 3:
        raise ValueError("unitary groups are supported in dimension 3 only")
    F = field_of_order(q * q)
    gens = _su3_generators(F, q)
    scalars = None
    if fam == "PSU":
        scalars = [
            lam
            for lam in range(1, F.q)
            if int(F.from_code(lam) ** (q + 1)) == 1 and int(F.from_code(lam) ** n) == 1
        ]
    return MatrixGroup(F, n, gens, scalars=scalars, spec=spec)


def _symplectic_transvection(F, n, gram, v, a):
    """x -> x + a <x, v> v with <x, v> = x^T J v."""
    at, mt = F.add_table, F.mul_table
    # functional x -> <x, v>: row vector J v
    jv = [0] * n
    for i in range(n):
        s = 0
        for j in range(n):
            s = at[s][mt[gram[i * n + j]][v[j]]]
        jv[i] = s
    m = list(matrices.identity(n))
    for i in range(n):
        for j in range(n):
            m[i * n + j] = at[m[i * n + j]][mt[a][mt[v[i]][jv[j]]]]
    return tuple(m)


def classical_order(family: str, n: int, q: int) -> int:
    """Closed-form order, used as an oracle against enumeration."""
    fam = family.lower()
    if fam in ("gl", "sl", "psl"):
        o = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            o *= q**i - 1
        if fam == "gl":
            return o * (q - 1)
        if fam == "psl":
            return o // math.gcd(n, q - 1)
        return o
    if fam in ("sp", "psp"):
        m = n // 2
        o = q ** (m * m)
        for i in range(1, m + 1):
            o *= q ** (2 * i) - 1
        return o // math.gcd(2, q - 1) if fam == "psp" else o
    if fam in ("su", "psu"):
        o = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            o *= q**i - (-1) ** i
        return o // math.gcd(n, q + 1) if fam == "psu" else o
    raise ValueError(family)


# -- Suzuki groups -----------------------------------------------------------


def _suzuki_params(q: int):
    f2 = q.bit_length() - 1
    if q != 1 << f2 or f2 % 2 == 0 or f2 < 3:
        raise ValueError("Suzuki groups need q = 2^(2f+1) with f >= 1")
    f = (f2 - 1) // 2
    F = make_field(2, f2)
    theta = 2 ** (f + 1)
    return F, f, theta


def suzuki_matrix(F, theta: int, a: int, b: int):
    """The lower unitriangular element S(a, b) of Sz(q), as field codes."""
    A, B = F.from_code(a), F.from_code(b)
    At, Bt = A**theta, B**theta
    rows = [
        [1, 0, 0, 0],
        [A, 1, 0, 0],
        [B, At, 1, 0],
        [A * A * At + A * B + Bt, A * At + B, A, 1],
    ]
    return matrices.from_rows(rows, F)


def suzuki(q: int) -> MatrixGroup:
    """Sz(q) < Sp(4, q) generated by S(a, b), a torus element and the antidiagonal involution."""
    F, f, theta = _suzuki_params(q)
    lam = primitive_element(F)
    e = 2**f
    diag = [lam ** (1 + e), lam**e, lam ** (-e), lam ** (-1 - e)]
    D = tuple(int(diag[i]) if i == j else 0 for i in range(4) for j in range(4))
    T = tuple(1 if i + j == 3 else 0 for i in range(4) for j in range(4))
    gens = []
    for a in _field_basis(F):
        gens.append(suzuki_matrix(F, theta, a, 0))
        gens.append(suzuki_matrix(F, theta, 0, a))
    gens += [D, T]
    return MatrixGroup(F, 4, gens, spec=f"suzuki({q})")


def suzuki_2group(q: int) -> LawGroup:
    """Sylow 2-subgroup of Sz(q) on pairs (a, b) of field codes.

    (a, b)(a', b') = (a + a', b + b' + a^theta a'), matching S(a,b) S(a',b').
    """
    F, _, theta = _suzuki_params(q)
    mt = F.mul_table
    th = [int(F.from_code(c) ** theta) for c in range(F.q)]

    def mul(u, v):
        a, b = u
        c, d = v
        return (a ^ c, b ^ d ^ mt[th[a]][c])

    def inv(u):
        a, b = u
        return (a, b ^ mt[th[a]][a])

    gens = [(a, 0) for a in _field_basis(F)] + [(0, a) for a in _field_basis(F)]
    G = LawGroup((0, 0), mul, inv, gens, spec=f"suzuki_2group({q})")
    G.field, G.theta = F, theta
    return G


# -- unitary witness family --------------------------------------------------


def psu3_matrix(F, q: int, x: int, y: int):
    """M(x, y) = [[1,0,0],[x,1,0],[y,x^q,1]] over F_{q^2}."""
    X = F.from_code(x)
    return (1, 0, 0, x, 1, 0, y, int(X**q), 1)


def psu3_unipotent_even(q: int) -> MatrixGroup:
    """All M(x, y) with y + y^q = x^(1+q); a Sylow 2-subgroup of PSU(3, q), q = 2^m."""
    m = q.bit_length() - 1
    if q != 1 << m or m < 2:
        raise ValueError("need q = 2^m with m >= 2")
    F = make_field(2, 2 * m)
    els = []
    for x in range(F.q):
        X = F.from_code(x)
        rhs = X ** (1 + q)
        for y in range(F.q):
            Y = F.from_code(y)
            if Y + Y**q == rhs:
                els.append(psu3_matrix(F, q, x, y))
    mul = matrices.make_mul(F, 3)
    gens = _greedy_generators(mul, matrices.identity(3), els)
    G = MatrixGroup(F, 3, gens, spec=f"psu3_unipotent_even({q})")
    G.q = q
    return G


def psu3_witness(q: int):
    """(A, B, zeta, xi) with A = M(1, zeta), B = M(zeta, xi).

    zeta solves X^q + X + 1 = 0 and xi solves X^q + X = zeta^(1+q).
    """
    m = q.bit_length() - 1
    F = make_field(2, 2 * m)
    zeta = solve_artin_schreier(F, F.one)  # char 2: X^q + X = 1
    xi = solve_artin_schreier(F, zeta ** (1 + q))
    A = psu3_matrix(F, q, 1, int(zeta))
    B = psu3_matrix(F, q, int(zeta), int(xi))
    return A, B, zeta, xi


# -- J1 ----------------------------------------------------------------------

J1_ORDER = 175560


@functools.lru_cache(maxsize=1)
def j1() -> PermGroup:
    """Janko's J1 on 266 points (cosets of PSL(2,11)); order checked on load."""
    data = json.loads(resources.files("irratio.data").joinpath("j1_266.json").read_text())
    G = PermGroup(data["degree"], [tuple(g) for g in data["generators"]], spec="j1()")
    if G.order != J1_ORDER:
        raise RuntimeError(f"embedded J1 data generates a group of order {G.order}")
    return G


# -- semidirect families -----------------------------------------------------


def singer_frobenius(m: int) -> SemidirectProduct:
    """C_2^n x| C_m with C_m inside a Singer cycle of GL(n, 2), n = ord_m(2)."""
    if m < 3 or m % 2 == 0:
        raise ValueError("singer_frobenius needs odd m >= 3")
    n = n_order(2, m)
    F = make_field(2, n)
    a = element_of_order(F, m)
    poly = minimal_polynomial(a)
    C = companion_matrix(poly, make_field(2))
    V = elementary_abelian(2, n)
    K = cyclic(m)
    act = ActionMap(K, V, [C])
    G = SemidirectProduct(V, K, act, spec=f"singer_frobenius({m})")
    return G


def matrix_module_extension(G: Group, rep, p: int | None = None, spec: str = "") -> SemidirectProduct:
    """F_p^d x| G for a faithful matrix representation of G.

    ``rep`` is an :class:`ActionMap` onto an elementary abelian vector group,
    or a list of d x d matrices over Z/p, one per generator of G.
    """
    if not isinstance(rep, ActionMap):
        mats = list(rep)
        d = len(mats[0])
        if p is None:
            raise ValueError("prime p is required with bare matrices")
        V = elementary_abelian(p, d)
        rep = ActionMap(G, V, mats)
    V = rep.target
    for h in G.elements:
        if h != G.identity and all(rep(h)(s) == s for s in V.generators):
            raise ValueError(f"representation is not faithful: {G.fmt(h)} acts trivially")
    return SemidirectProduct(V, G, rep, spec=spec or f"matrix_module_extension({G.spec},...)")


MAX_REGULAR_DEGREE = 7


def regular_module_extension(G: Group, p: int) -> SemidirectProduct:
    """F_p[G] x| G with G acting by the right-regular permutation module."""
    n = G.order
    if n > MAX_REGULAR_DEGREE:
        raise ValueError(
            f"regular module of a group of order {n} is too large; use matrix_module_extension"
        )
    if not isprime(p) or p % n != 2 % n or n % p == 0:
        raise ValueError(f"need a prime p with p = 2 mod {n} and p not dividing {n}")
    els = G.elements

    def perm_matrix(h):
        hi = G.inv(h)
        img = [G.index_of(G.mul(x, hi)) for x in els]  # e_x -> e_{x h^-1}
        return [[1 if img[j] == i else 0 for j in range(n)] for i in range(n)]

    V = elementary_abelian(p, n)
    rep = ActionMap(G, V, [perm_matrix(h) for h in G.generators])
    return matrix_module_extension(G, rep, spec=f"regular_module_extension({G.spec},{p})")


def extraspecial(p: int, n: int) -> LawGroup:
    """p^(1+2n) of exponent p on pairs (u, c), u in F_p^(2n), c in F_p."""
    if p == 2 or not isprime(p):
        raise ValueError("extraspecial groups are built for odd primes only")
    if n < 1:
        raise ValueError("need width n >= 1")
    half = pow(2, -1, p)
    rng = range(n)

    def form(u, v):
        return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in rng)

    def mul(x, y):
        u, c = x
        v, e = y
        return (tuple((a + b) % p for a, b in zip(u, v)), (c + e + half * form(u, v)) % p)

    def inv(x):
        u, c = x
        return (tuple((-a) % p for a in u), (-c) % p)

    zero = (0,) * (2 * n)
    gens = [(tuple(1 if i == j else 0 for i in range(2 * n)), 0) for j in range(2 * n)]
    G = LawGroup(
        (zero, 0), mul, inv, gens, spec=f"extraspecial({p},{n})",
        fmt=lambda x: "(" + ",".join(map(str, x[0])) + "|" + str(x[1]) + ")",
    )
    G.p, G.n, G.form = p, n, form
    return G


def _orbit_reduced(A: Group, H: Group, act: ActionMap, gens):
    """Drop generators of A that are images of kept ones under H."""
    kept, reach = [], set()
    for a in gens:
        if a in reach:
            continue
        kept.append(a)
        reach.update(act(h)(a) for h in H.elements)
    return kept


def winter_extension(G: PermGroup, p: int) -> SemidirectProduct:
    """p^(1+2n) x| G with g acting as (M_g + M_g) on u and trivially on c."""
    if not isinstance(G, PermGroup):
        raise TypeError("winter_extension needs a permutation group")
    n = G.degree
    V = extraspecial(p, n)

    def rule(h):
        def apply(x):
            u, c = x
            out = [0] * (2 * n)
            for i, j in enumerate(h):
                out[j] = u[i]
                out[n + j] = u[n + i]
            return (tuple(out), c)

        return Automorphism(apply)

    act = ActionMap(G, V, rule=rule)
    for h in G.generators:
        for x in V.generators:
            for y in V.generators:
                if V.form(rule(h)(x)[0], rule(h)(y)[0]) % p != V.form(x[0], y[0]) % p:
                    raise ValueError("permutation action does not preserve the symplectic form")
    base = [(a, G.identity) for a in _orbit_reduced(V, G, act, V.generators)]
    gens = base + [(V.identity, h) for h in G.generators]
    return SemidirectProduct(V, G, act, spec=f"winter_extension({G.spec},{p})", generators=gens)


def minimal_nonabelian_p(p: int, r: int, s: int) -> LawGroup:
    """<x, y | x^(p^r) = y^(p^s) = [x,y]^p = 1, [x,y] central> on Z_{p^r} x Z_{p^s} x Z_p."""
    if not isprime(p) or not r >= s >= 1:
        raise ValueError("need a prime p and r >= s >= 1")
    pr, ps = p**r, p**s

    def mul(u, v):
        return ((u[0] + v[0]) % pr, (u[1] + v[1]) % ps, (u[2] + v[2] + u[1] * v[0]) % p)

    def inv(u):
        a, b, c = u
        return ((-a) % pr, (-b) % ps, (-c + a * b) % p)

    G = LawGroup((0, 0, 0), mul, inv, [(1, 0, 0), (0, 1, 0)], spec=f"minimal_nonabelian_p({p},{r},{s})")
    _check_minimal_nonabelian_relations(G, p, pr, ps)
    return G


def _check_minimal_nonabelian_relations(G, p, pr, ps):
    x, y = G.generators
    c = G.commutator(x, y)
    checks = [
        G.power(x, pr) == G.identity,
        G.power(y, ps) == G.identity,
        G.power(c, p) == G.identity,
        G.commutator(x, c) == G.identity,
        G.commutator(y, c) == G.identity,
        c != G.identity,
    ]
    if not all(checks):
        raise AssertionError("presentation relations fail for " + G.spec)


def minimal_nonabelian_qp(q: int, p: int, s: int) -> SemidirectProduct:
    """C_q^r x| C_{p^s}, the generator acting by a companion matrix of order p."""
    if not (isprime(q) and isprime(p)) or q == p or s < 1:
        raise ValueError("need distinct primes q, p and s >= 1")
    r = n_order(q, p)
    if r < 2:
        raise ValueError(f"ord_{p}({q}) = 1: the metacyclic case r = 1 is excluded")
    F = make_field(q, r)
    mp = minimal_polynomial(element_of_order(F, p))
    C = companion_matrix(mp, make_field(q))
    V = elementary_abelian(q, r)
    H = cyclic(p**s)
    act = ActionMap(H, V, [C])
    return SemidirectProduct(V, H, act, spec=f"minimal_nonabelian_qp({q},{p},{s})")


def metacyclic(n: int, m: int, k: int) -> LawGroup:
    """C_n x| C_m with the generator of C_m acting by x -> x^k."""
    if n < 1 or m < 1 or pow(k, m, n) != 1 % n or math.gcd(k, n) != 1:
        raise ValueError(f"k = {k} does not define an action of C_{m} on C_{n}")
    kp = [pow(k, b, n) for b in range(m)]

    def mul(u, v):
        return ((u[0] + kp[u[1]] * v[0]) % n, (u[1] + v[1]) % m)

    def inv(u):
        b = (-u[1]) % m
        return ((-kp[b] * u[0]) % n, b)

    return LawGroup((0, 0), mul, inv, [(1 % n, 0), (0, 1 % m)], spec=f"metacyclic({n},{m},{k})")


# -- the Frobenius kernel example -------------------------------------------


def suzuki_frobenius_example(q: int = 8, ell: int = 13) -> SemidirectProduct:
    """(P x C_ell^2) x| C_{q-1}, P the Suzuki 2-group, C_{q-1} acting diagonally.

    On P the generator acts as (a, b) -> (mu a, mu^(1+theta) b) (torus
    conjugation); on C_ell^2 by a companion matrix of an order-(q-1)
    element of GF(ell^2).
    """
    P = suzuki_2group(q)
    F, theta = P.field, P.theta
    m = q - 1
    mu = primitive_element(F)
    mu_a, mu_b = int(mu), int(mu ** (1 + theta))
    mt = F.mul_table
    W = elementary_abelian(ell, 2)
    E = make_field(ell, 2)
    C = companion_matrix(minimal_polynomial(element_of_order(E, m)), make_field(ell))
    lin = matrix_aut(C, ell)
    base = DirectProduct(P, W, spec=f"direct_product({P.spec},{W.spec})")

    def gen_image(x):
        (a, b), v = x
        return ((mt[mu_a][a], mt[mu_b][b]), lin(v))

    K = cyclic(m)
    act = ActionMap(K, base, [gen_image])
    return SemidirectProduct(base, K, act, spec=f"suzuki_frobenius_example({q},{ell})")
