"""Named verification suites over the group catalog.

Every suite is a function filling a :class:`SuiteContext` with items.  An
item passes iff its expected and observed values are equal.  All choices
are deterministic given the seed.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from sympy import primefactors

from . import constructions as C
from . import irrationality as I
from . import structure as S
from .field import make_field
from .grammar import cached
from .group import BudgetExceeded, Group, parse_perm
from . import matrices
from .products import quotient_group

VERSION = "1"

PSL_QS = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)

CATALOG = tuple(f"psl(2,{q})" for q in PSL_QS) + (
    "suzuki(8)",
    "j1()",
    "su(3,3)",
    "psp(4,3)",
    "gl(2,3)",
    "sl(3,3)",
    "alternating(6)",
    "symmetric(4)",
    "symmetric(5)",
    "alternating(4)",
    "dihedral(8)",
    "quaternion(8)",
    "suzuki_2group(8)",
    "psu3_unipotent_even(4)",
    "singer_frobenius(3)",
    "singer_frobenius(5)",
    "singer_frobenius(7)",
    "minimal_nonabelian_qp(5,3,1)",
    "minimal_nonabelian_qp(3,5,1)",
    "regular_module_extension(cyclic(3),5)",
    "metacyclic(7,3,2)",
    "metacyclic(9,3,4)",
    "extraspecial(3,1)",
    "wreath_product(cyclic(3),cyclic_perm(3))",
    "minimal_nonabelian_p(2,2,1)",
    "elementary_abelian(2,3)",
    "abelian(4,2)",
    "cyclic(12)",
)

# class-representative oracle results, keyed by canonical spec
ORACLE: dict[str, tuple[int, int]] = {}


@dataclass
class Item:
    desc: str
    spec: str
    expected: object
    observed: object
    passed: bool
    witness: dict | None = None
    millis: int = 0
    skipped: str | None = None
    optional: bool = False

    def as_dict(self) -> dict:
        d = {
            "desc": self.desc,
            "spec": self.spec,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.skipped is not None:
            d["skipped"] = self.skipped
        if self.optional:
            d["optional"] = True
        d["millis"] = self.millis
        return d


@dataclass
class SuiteResult:
    suite: str
    items: list[Item] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(it.passed or it.optional for it in self.items)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "items": [it.as_dict() for it in self.items],
            "pass": self.passed,
            "version": VERSION,
        }


def witness_dict(G: Group, w: I.Witness | None) -> dict | None:
    if w is None:
        return None
    return {"x": G.fmt(w.x), "k": w.k, "g": G.fmt(w.g)}


class SuiteContext:
    def __init__(self, name: str, seed: int = 0):
        self.result = SuiteResult(name)
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.specs: list[str] = []

    def group(self, spec: str) -> Group:
        G = cached(spec)
        if G.spec not in self.specs:
            self.specs.append(G.spec)
        return G

    def check(self, desc: str, spec: str, expected, fn, optional: bool = False):
        """Run fn() -> observed or (observed, witness dict) and record an item."""
        t = time.perf_counter()
        witness, skipped = None, None
        try:
            out = fn()
            if isinstance(out, tuple) and len(out) == 2 and (out[1] is None or isinstance(out[1], dict)):
                observed, witness = out
            else:
                observed = out
        except BudgetExceeded as exc:
            observed, skipped = None, f"budget exceeded: {exc}"
        ms = int((time.perf_counter() - t) * 1000)
        passed = skipped is None and observed == expected
        item = Item(desc, spec, expected, observed, passed, witness, ms, skipped, optional)
        self.result.items.append(item)
        return item

    def skip(self, desc: str, spec: str, reason: str):
        self.result.items.append(Item(desc, spec, None, None, False, skipped=reason, optional=True))

    def oracle_item(self):
        """Power-orbit criterion vs. direct N = C scan on every class of every group used."""
        def run():
            agree = total = 0
            for spec in self.specs:
                a, t = oracle(spec)
                agree += a
                total += t
            return agree, total

        t0 = time.perf_counter()
        agree, total = run()
        ms = int((time.perf_counter() - t0) * 1000)
        self.result.items.append(
            Item(
                f"B = {{1}} iff C(x) = N(<x>) on all class representatives of {len(self.specs)} groups",
                "*",
                total,
                agree,
                agree == total,
                millis=ms,
            )
        )


def oracle(spec: str) -> tuple[int, int]:
    G = cached(spec)
    if G.spec not in ORACLE:
        ORACLE[G.spec] = I.crosscheck_all(G)
    return ORACLE[G.spec]


def oracle_group(G: Group) -> tuple[int, int]:
    """Same as :func:`oracle` for groups built outside the spec cache."""
    if G.spec not in ORACLE:
        ORACLE[G.spec] = I.crosscheck_all(G)
    return ORACLE[G.spec]


# -- helpers -----------------------------------------------------------------


def is_dihedral8(H: Group) -> bool:
    return H.order == 8 and not S.is_abelian(H) and int(np.sum(H.orders() == 2)) == 5


def verdict_pair(G: Group, v: I.Verdict):
    return bool(v), witness_dict(G, v.witness)


def sylow_is_normal(G: Group, p: int) -> bool:
    return S.sylow(G, p).is_normal()


def _hermitian_orthonormal_basis(F, q):
    """Columns v_1..v_3 with v_i^T J v_j^(q) = delta_ij for the antidiagonal J."""
    d = 3
    J = tuple(1 if i + j == d - 1 else 0 for i in range(d) for j in range(d))
    frob = F.frobenius_table(F.k // 2)
    mt, at = F.mul_table, F.add_table

    def h(u, v):
        w = matrices.mat_vec(J, tuple(frob[x] for x in v), F, d)
        s = 0
        for a, b in zip(u, w):
            s = at[s][mt[a][b]]
        return s

    vecs = [(a, b, c) for a in range(F.q) for b in range(F.q) for c in range(F.q)]
    basis = []
    for v in vecs:
        if h(v, v) == 1 and all(h(u, v) == 0 for u in basis):
            basis.append(v)
            if len(basis) == d:
                break
    return tuple(basis[j][i] for i in range(d) for j in range(d))


def st_matrices(p: int):
    """The matrices s, t over the prime field GF(p)."""
    m1 = p - 1
    s = ((0, m1, 0), (1, 0, 0), (0, 0, 1))
    t = ((0, 1, 0), (1, 0, 0), (0, 0, m1))
    return s, t


def _dihedral_from(G: Group, a, b) -> dict:
    H = G.subgroup([a, b]).as_group()
    return {
        "in_group": True,
        "order_s": G.element_order(a),
        "order_t": G.element_order(b),
        "subgroup_order": H.order,
        "dihedral": is_dihedral8(H),
    }


# -- suites ------------------------------------------------------------------


def suite_catalog_orders(ctx: SuiteContext):
    for q in PSL_QS:
        spec = f"psl(2,{q})"
        expected = q * (q * q - 1) // math.gcd(2, q - 1)
        ctx.check(f"|PSL(2,{q})| = q(q^2-1)/gcd(2,q-1)", spec, expected, lambda s=spec: ctx.group(s).order)
    for spec, n in (("suzuki(8)", 29120), ("su(3,3)", 6048), ("psp(4,3)", 25920), ("j1()", 175560)):
        ctx.check(f"|{spec}| = {n}", spec, n, lambda s=spec: ctx.group(s).order)
    for fam, n, q in (("SL", 3, 3), ("GL", 2, 3), ("SU", 3, 4), ("Sp", 4, 3)):
        spec = f"{fam.lower()}({n},{q})"
        ctx.check(f"|{spec}| matches the closed form", spec, C.classical_order(fam, n, q),
                  lambda s=spec: ctx.group(s).order)


def suite_thm_2simple_psl(ctx: SuiteContext):
    for q in PSL_QS:
        spec = f"psl(2,{q})"
        ctx.check(
            f"PSL(2,{q}) 2-irrational iff q mod 8 in {{0,3,5}} (q mod 8 = {q % 8})",
            spec,
            q % 8 in (0, 3, 5),
            lambda s=spec: verdict_pair(ctx.group(s), I.is_p_irrational(ctx.group(s), 2)),
        )
        ctx.check(
            f"Sylow 2 of PSL(2,{q}) is {'elementary abelian' if q % 2 == 0 else 'dihedral'}",
            spec,
            True,
            lambda q=q, s=spec: _psl_sylow_shape(ctx.group(s), q),
        )
    ctx.oracle_item()


def _psl_sylow_shape(G, q):
    P = S.sylow(G, 2).as_group()
    if q % 2 == 0:
        return S.is_elementary_abelian(P)
    two = S.p_part(q * q - 1, 2) // 2
    if two == 4:
        return S.is_elementary_abelian(P) and P.order == 4  # Klein four, the dihedral group of order 4
    involutions = int(np.sum(P.orders() == 2))
    return P.order == two and not S.is_abelian(P) and S.exponent(P) == two // 2 and involutions == two // 2 + 1


def suite_thm_2simple_witnesses(ctx: SuiteContext):
    # s, t in SL(3,3)
    SL = ctx.group("sl(3,3)")
    F3 = make_field(3)
    s, t = st_matrices(3)
    sm, tm = matrices.from_rows(s, F3), matrices.from_rows(t, F3)
    expected = {"in_group": True, "order_s": 4, "order_t": 2, "subgroup_order": 8, "dihedral": True}
    ctx.check("s, t generate a dihedral group of order 8 in SL(3,3)", "sl(3,3)", expected,
              lambda: _dihedral_from(SL, sm, tm) if sm in SL and tm in SL else {"in_group": False})

    # the same matrices in SU(3,3) after moving to the antidiagonal form
    SU = ctx.group("su(3,3)")
    F9 = SU.ctx

    def su_check():
        P = _hermitian_orthonormal_basis(F9, 3)
        Pi = matrices.mat_inv(P, F9, 3)
        s9, t9 = (matrices.from_rows(m, F9) for m in (s, t))
        a = matrices.mat_mul(matrices.mat_mul(P, s9, F9, 3), Pi, F9, 3)
        b = matrices.mat_mul(matrices.mat_mul(P, t9, F9, 3), Pi, F9, 3)
        if a not in SU or b not in SU:
            return {"in_group": False}
        out = _dihedral_from(SU, a, b)
        out["meets_center_trivially"] = S.center(SU).order == 1
        return out

    ctx.check("s, t (conjugated into the antidiagonal form) give D_8 in SU(3,3), center trivial",
              "su(3,3)", dict(expected, meets_center_trivially=True), su_check)
    ctx.check("SU(3,3) is not 2-irrational", "su(3,3)", False,
              lambda: verdict_pair(SU, I.is_p_irrational(SU, 2)))

    # unipotent witness in PSU(3,4)
    U = ctx.group("psu3_unipotent_even(4)")
    SU4 = ctx.group("su(3,4)")

    def unipotent():
        A, B, zeta, xi = C.psu3_witness(4)
        F = U.ctx
        q = 4
        Bi = U.inv(B)
        return {
            "zeta_equation": zeta**q + zeta + F.one == F.zero,
            "xi_equation": xi**q + xi == zeta ** (1 + q),
            "order_P": U.order,
            "A_in_P": A in U,
            "B_in_P": B in U,
            "A_in_SU": A in SU4,
            "B_in_SU": B in SU4,
            "order_A": U.element_order(A),
            "A^B = A^-1": U.mul(U.mul(Bi, A), B) == U.inv(A),
        }

    ctx.check(
        "A = M(1,zeta) has order 4 and A^B = A^-1 for B = M(zeta,xi) in psu3_unipotent_even(4)",
        "psu3_unipotent_even(4)",
        {"zeta_equation": True, "xi_equation": True, "order_P": 64, "A_in_P": True, "B_in_P": True,
         "A_in_SU": True, "B_in_SU": True, "order_A": 4, "A^B = A^-1": True},
        unipotent,
    )
    ctx.check("every M(x,y) lies in SU(3,4)", "psu3_unipotent_even(4)", True,
              lambda: all(m in SU4 for m in U.elements))

    # PSp(4,3): a real element of order 4
    PSp = ctx.group("psp(4,3)")

    def psp_real4():
        cl = PSp.classes()
        for c, r in enumerate(cl.reps):
            if cl.rep_orders[c] == 4:
                x = PSp.elements[r]
                if S.is_real(PSp, x):
                    g = I.find_conjugator(PSp, x, PSp.inv(x))
                    return True, witness_dict(PSp, I.Witness(x, 3, g))
        return False, None

    ctx.check("PSp(4,3) has an order-4 element conjugate to its inverse", "psp(4,3)", True, psp_real4)
    ctx.check("PSp(4,3) is not 2-irrational", "psp(4,3)", False,
              lambda: verdict_pair(PSp, I.is_p_irrational(PSp, 2)))

    GL = ctx.group("gl(2,3)")
    ctx.check("GL(2,3) is not irrational", "gl(2,3)", False, lambda: verdict_pair(GL, I.is_irrational(GL)))

    A6 = ctx.group("alternating(6)")
    ctx.check("A_6 is not 2-irrational", "alternating(6)", False,
              lambda: verdict_pair(A6, I.is_p_irrational(A6, 2)))

    def a6_d8():
        r = parse_perm("(1 2 3 4)(5 6)", 6)
        f = parse_perm("(1 3)(5 6)", 6)
        return is_dihedral8(A6.subgroup([r, f]).as_group())

    ctx.check("A_6 contains <(1 2 3 4)(5 6), (1 3)(5 6)> = D_8", "alternating(6)", True, a6_d8)
    ctx.check("A_5 = PSL(2,5) is 2-irrational", "alternating(5)", True,
              lambda: verdict_pair(ctx.group("alternating(5)"), I.is_p_irrational(ctx.group("alternating(5)"), 2)))
    ctx.oracle_item()


def suite_thm_2simple_sz_j1(ctx: SuiteContext):
    Sz = ctx.group("suzuki(8)")
    ctx.check("Sz(8) is 2-irrational", "suzuki(8)", True, lambda: verdict_pair(Sz, I.is_p_irrational(Sz, 2)))
    ctx.check("Sz(8) is not irrational (odd-order fusion)", "suzuki(8)", False,
              lambda: verdict_pair(Sz, I.is_irrational(Sz)))
    ctx.check("Sz(8) has 11 conjugacy classes", "suzuki(8)", 11, lambda: len(Sz.classes().reps))
    P2 = ctx.group("suzuki_2group(8)")

    def sylow_matches():
        P = S.sylow(Sz, 2).as_group()
        return {
            "order": P.order,
            "exponent": S.exponent(P),
            "classes_match": len(P.classes().reps) == len(P2.classes().reps),
            "irrational": bool(I.is_irrational(P)),
        }

    ctx.check("Sylow 2 of Sz(8) matches suzuki_2group(8)", "suzuki(8)",
              {"order": 64, "exponent": 4, "classes_match": True, "irrational": True}, sylow_matches)

    def embedding():
        F, theta = P2.field, P2.theta
        image = {x: C.suzuki_matrix(F, theta, *x) for x in P2.elements}
        hom = all(image[P2.mul(a, b)] == Sz.mul(image[a], image[b]) for a in P2.elements for b in P2.generators)
        return {"injective": len(set(image.values())) == 64, "homomorphism": hom,
                "inside": all(m in Sz for m in image.values())}

    ctx.check("(a,b) -> S(a,b) embeds suzuki_2group(8) in Sz(8)", "suzuki_2group(8)",
              {"injective": True, "homomorphism": True, "inside": True}, embedding)

    def order4_not_real():
        cl = P2.classes()
        return all(not S.is_real(P2, P2.elements[r]) for c, r in enumerate(cl.reps) if cl.rep_orders[c] == 4)

    ctx.check("no order-4 element of suzuki_2group(8) is conjugate to its inverse", "suzuki_2group(8)",
              True, order4_not_real)
    J = ctx.group("j1()")
    ctx.check("J1 is 2-irrational", "j1()", True, lambda: verdict_pair(J, I.is_p_irrational(J, 2)))

    def j1_sylow():
        P = S.sylow(J, 2).as_group()
        return {"order": P.order, "elementary_abelian": S.is_elementary_abelian(P)}

    ctx.check("Sylow 2 of J1 is elementary abelian of order 8", "j1()",
              {"order": 8, "elementary_abelian": True}, j1_sylow)
    E = ctx.group("elementary_abelian(2,3)")
    ctx.check("C_2^3 (the Sylow 2 of the small Ree groups) is irrational", "elementary_abelian(2,3)", True,
              lambda: verdict_pair(E, I.is_irrational(E)))
    ctx.skip("small Ree group 2G2(27)", "-", "not constructed: order about 10^10 exceeds desk scale")
    ctx.oracle_item()


def suite_lem_sylow2irr(ctx: SuiteContext):
    for spec in CATALOG:
        G = ctx.group(spec)
        ctx.check(
            "2-irrational iff the Sylow 2-subgroup is irrational",
            spec,
            True,
            lambda G=G: bool(I.is_p_irrational(G, 2)) == bool(I.is_irrational(S.sylow(G, 2).as_group())),
        )
    ctx.oracle_item()


# semidirect products V x| H whose base V is the normal pi'-subgroup, pi = primes of |H|
PINORMAL_GROUPS = tuple(f"singer_frobenius({m})" for m in (3, 5, 7, 9, 11, 13, 15, 21)) + (
    "minimal_nonabelian_qp(5,3,1)",
    "minimal_nonabelian_qp(3,5,1)",
    "minimal_nonabelian_qp(2,3,1)",
    "regular_module_extension(cyclic(3),5)",
    "suzuki_frobenius_example(8,13)",
    "winter_extension(cyclic_perm(3),5)",
)


def suite_lem_pinormal(ctx: SuiteContext):
    for spec in PINORMAL_GROUPS:
        G = ctx.group(spec)

        def run(G=G):
            N = G.base_subgroup()
            nprimes = set(primefactors(N.order))
            pi = [p for p in primefactors(G.order) if p not in nprimes]
            hyp = N.is_normal() and bool(I.is_pi_irrational(G, pi))
            Q = quotient_group(G, N)
            return {"hypothesis": hyp, "quotient_pi_irrational": bool(I.is_pi_irrational(Q, pi))}

        ctx.check("N = base is a normal pi'-subgroup of the pi-irrational G; G/N is pi-irrational",
                  spec, {"hypothesis": True, "quotient_pi_irrational": True}, run)
    ctx.oracle_item()


def sg16_candidates():
    """All actions of C_2 on C_4 x C_2 by involutory automorphisms, as spec strings."""
    from .grammar import parse_group_spec

    A = C.abelian(4, 2)
    out = []
    for a in range(4):
        for b in (0, 2):
            for c in range(2):
                for d in range(2):
                    def f(v, a=a, b=b, c=c, d=d):
                        return ((a * v[0] + b * v[1]) % 4, (c * v[0] + d * v[1]) % 2)

                    imgs = {v: f(v) for v in A.elements}
                    if len(set(imgs.values())) != 8:
                        continue
                    if any(imgs[A.mul(u, v)] != A.mul(imgs[u], imgs[v]) for u in A.elements for v in A.elements):
                        continue
                    if any(imgs[imgs[v]] != v for v in A.elements):
                        continue
                    out.append(str(parse_group_spec(f"semidirect_product(abelian(4,2),cyclic(2),[[{a},{b}],[{c},{d}]])")))
    return out


def d8_quotient(G: Group) -> bool:
    Z = S.center(G)
    orders = G.orders()
    for i in Z.indices:
        if orders[i] == 2:
            N = G.subgroup([G.elements[int(i)]])
            if is_dihedral8(quotient_group(G, N)):
                return True
    return False


def sg16_winners() -> list[str]:
    return [spec for spec in sg16_candidates()
            if bool(I.is_irrational(cached(spec))) and d8_quotient(cached(spec))]


def suite_smallgroup16_search(ctx: SuiteContext):
    cands = sg16_candidates()
    for spec in cands:
        ctx.group(spec)
    wins: list[str] = []

    def run():
        wins.extend(sg16_winners())
        return bool(wins)

    item = ctx.check(
        f"some (C_4 x C_2) x| C_2 among {len(cands)} involutory actions is irrational with a D_8 quotient",
        "semidirect_product(abelian(4,2),cyclic(2),*)", True, run)
    if wins:
        item.desc += f"; winners: {', '.join(wins)}"
    ctx.oracle_item()


def suite_bound_lemma(ctx: SuiteContext):
    specs = [f"elementary_abelian(2,{d})" for d in range(1, 6)] + ["suzuki_2group(8)"] + sg16_winners()
    for spec in specs:
        P = ctx.group(spec)

        def run(P=P):
            d = S.min_generators(P)
            s = S.involution_class_count(P)
            phi = S.frattini_pgroup(P).order
            return {
                "irrational": bool(I.is_irrational(P)),
                "2^d <= s+1": 2**d <= s + 1,
                "|Omega| >= |P/Phi|": S.omega1(P).order >= P.order // phi,
            }, None

        item = ctx.check("2^d <= s+1 and |Omega(P)| >= |P/Phi(P)|", spec,
                         {"irrational": True, "2^d <= s+1": True, "|Omega| >= |P/Phi|": True}, run)
        item.desc += f" (d={S.min_generators(P)}, s={S.involution_class_count(P)})"
    P = ctx.group("suzuki_2group(8)")
    ctx.check("suzuki_2group(8): d = 3, s = 7, 2^d = s+1 = 8", "suzuki_2group(8)",
              {"d": 3, "s": 7, "2^d": 8, "s+1": 8},
              lambda: {"d": S.min_generators(P), "s": S.involution_class_count(P),
                       "2^d": 2 ** S.min_generators(P), "s+1": S.involution_class_count(P) + 1})

    def sz2_invariants():
        Z, Phi, Om = S.center(P), S.frattini_pgroup(P), S.omega1(P)
        return {"order": P.order, "exponent": S.exponent(P), "Z=Phi=Omega": Z == Phi == Om,
                "|Z|": Z.order, "involutions": sorted(P.fmt(x) for x in Om.elements if x != P.identity)
                == sorted(P.fmt((0, b)) for b in range(1, 8))}

    ctx.check("suzuki_2group(8): order 64, exponent 4, Z = Phi = Omega = {(0,b)} of order 8", "suzuki_2group(8)",
              {"order": 64, "exponent": 4, "Z=Phi=Omega": True, "|Z|": 8, "involutions": True}, sz2_invariants)
    ctx.oracle_item()


def suite_thm_main_consequences(ctx: SuiteContext):
    for spec in CATALOG:
        G = ctx.group(spec)
        if bool(I.is_2prime_irrational(G)):
            ctx.check("2'-irrational => normal Sylow 2-subgroup", spec, True, lambda G=G: sylow_is_normal(G, 2))
        if bool(I.is_irrational(G)):
            def inv_sub(G=G):
                T = S.involution_subgroup(G)
                return {"elementary_abelian": S.is_elementary_abelian(T.as_group()), "normal": T.is_normal()}

            ctx.check("irrational => involutions generate an elementary abelian normal subgroup", spec,
                      {"elementary_abelian": True, "normal": True}, inv_sub)
    S4 = ctx.group("symmetric(4)")
    ctx.check("negative control: S_4 fails the 2'-irrational hypothesis", "symmetric(4)", False,
              lambda: verdict_pair(S4, I.is_2prime_irrational(S4)))
    ctx.check("negative control: S_4 has no normal Sylow 2-subgroup", "symmetric(4)", False,
              lambda: sylow_is_normal(S4, 2))
    ctx.oracle_item()


SIMPLE = tuple(f"psl(2,{q})" for q in PSL_QS) + ("suzuki(8)", "j1()")


def suite_thm_pirr_consequences(ctx: SuiteContext):
    for spec in SIMPLE:
        G = ctx.group(spec)
        for p in primefactors(G.order):
            if p >= 5:
                ctx.check(f"simple group is not {p}-irrational", spec, False,
                          lambda G=G, p=p: verdict_pair(G, I.is_p_irrational(G, p)))
    for spec in ("minimal_nonabelian_qp(3,5,1)", "singer_frobenius(5)", "singer_frobenius(7)"):
        G = ctx.group(spec)
        for p in primefactors(G.order):
            if p >= 5 and bool(I.is_p_irrational(G, p)):
                ctx.check(f"{p}-irrational => no real element of order {p}", spec, False,
                          lambda G=G, p=p: any(S.is_real(G, G.elements[r]) for c, r in enumerate(G.classes().reps)
                                               if G.classes().rep_orders[c] == p))
    ctx.oracle_item()


def suite_three_irrational_simple(ctx: SuiteContext):
    G = ctx.group("psl(2,27)")
    ctx.check("PSL(2,27) is 3-irrational", "psl(2,27)", True, lambda: verdict_pair(G, I.is_p_irrational(G, 3)))
    H = ctx.group("psl(2,9)")
    ctx.check("PSL(2,9) (even power of 3) is not 3-irrational", "psl(2,9)", False,
              lambda: verdict_pair(H, I.is_p_irrational(H, 3)))
    Sz = ctx.group("suzuki(8)")
    ctx.check("3 does not divide |Sz(8)|", "suzuki(8)", True, lambda: Sz.order % 3 != 0)
    ctx.oracle_item()


def metacyclic_grid(max_n: int = 40, max_m: int = 16, max_order: int = 2000):
    """(n, m, k) with one k per cyclic subgroup <k> of (Z/n)^*, k^m = 1."""
    out = []
    for n in range(2, max_n + 1):
        for m in range(2, max_m + 1):
            if n * m > max_order:
                continue
            seen = set()
            for k in range(1, n):
                if math.gcd(k, n) == 1 and pow(k, m, n) == 1:
                    sub = frozenset(pow(k, j, n) for j in range(m))
                    if sub not in seen:
                        seen.add(sub)
                        out.append((n, m, k))
    return out


def suite_prop_collapse_metacyclic(ctx: SuiteContext):
    grid = metacyclic_grid()
    by_n: dict[int, list] = {}
    for n, m, k in grid:
        by_n.setdefault(n, []).append((m, k))
    agree = total = 0
    for n, mk in by_n.items():
        def run(n=n, mk=mk):
            nonlocal agree, total
            bad = []
            for m, k in mk:
                G = C.metacyclic(n, m, k)
                if bool(I.is_irrational(G)) and not S.is_abelian(G):
                    bad.append([m, k])
                a, t = I.crosscheck_all(G)
                agree += a
                total += t
            return bad

        ctx.check(f"irrational metacyclic(n={n}, m, k) are abelian ({len(mk)} groups)",
                  f"metacyclic({n},*,*)", [], run)
    ctx.result.items.append(Item(f"B = {{1}} iff C(x) = N(<x>) on {len(grid)} metacyclic groups", "*",
                                 total, agree, agree == total))
    ORACLE["metacyclic grid"] = (agree, total)


SUPERSOLVABLE = (
    "quaternion(8)",
    "quaternion(16)",
    "dihedral(16)",
    "suzuki_2group(8)",
    "extraspecial(5,1)",
    "minimal_nonabelian_p(3,2,1)",
    "metacyclic(7,3,2)",
    "metacyclic(9,3,4)",
    "metacyclic(13,4,5)",
    "metacyclic(21,2,20)",
    "direct_product(metacyclic(7,3,2),cyclic(5))",
    "direct_product(extraspecial(3,1),cyclic(4))",
    "abelian(6,10)",
)


def suite_prop_collapse_supersolvable_certified(ctx: SuiteContext):
    for spec in SUPERSOLVABLE:
        G = ctx.group(spec)

        def run(G=G):
            irr = bool(I.is_irrational(G))
            return (not irr) or S.is_nilpotent(G)

        ctx.check("certified supersolvable: irrational => nilpotent", spec, True, run)
    ctx.oracle_item()


def _frobenius_singer(G):
    K = G.complement_subgroup()
    chk = S.is_frobenius_with_complement(G, K)
    korders = G.orders()[K.indices]
    return {
        "irrational": bool(I.is_irrational(G)),
        "frobenius": chk.is_frobenius,
        "complement_cyclic_odd": K.order % 2 == 1 and int(korders.max()) == K.order,
        "kernel_is_base": chk.kernel is not None and chk.kernel == G.base_subgroup(),
    }


def suite_prop_frobenius(ctx: SuiteContext):
    for m in (3, 5, 7, 9, 11, 13, 15, 21):
        spec = f"singer_frobenius({m})"
        G = ctx.group(spec)
        ctx.check("irrational Frobenius group with cyclic complement of odd order", spec,
                  {"irrational": True, "frobenius": True, "complement_cyclic_odd": True, "kernel_is_base": True},
                  lambda G=G: _frobenius_singer(G))
    spec = "suzuki_frobenius_example(8,13)"
    G = ctx.group(spec)

    def run():
        K = G.complement_subgroup()
        chk = S.is_frobenius_with_complement(G, K)
        ker = chk.kernel.as_group() if chk.kernel is not None else None
        return {
            "order": G.order,
            "irrational": bool(I.is_irrational(G)),
            "frobenius": chk.is_frobenius,
            "kernel_nilpotent": ker is not None and S.is_nilpotent(ker),
            "kernel_abelian": ker is not None and S.is_abelian(ker),
            "kernel_p_group": ker is not None and S.is_p_group(ker),
        }

    ctx.check("(P x C_13^2) x| C_7 is an irrational Frobenius group with nilpotent non-abelian non-p kernel",
              spec, {"order": 75712, "irrational": True, "frobenius": True, "kernel_nilpotent": True,
                     "kernel_abelian": False, "kernel_p_group": False}, run)
    ctx.oracle_item()


FITTING = (
    ("semidirect_product(elementary_abelian(5,2),cyclic(3),companion(x^2+x+1@5))", 75, 25),
    ("minimal_nonabelian_qp(3,5,1)", 405, 81),
    ("direct_product(semidirect_product(elementary_abelian(5,2),cyclic(3),companion(x^2+x+1@5)),"
     "minimal_nonabelian_qp(3,5,1))", 30375, 2025),
    ("regular_module_extension(cyclic(3),5)", 375, 125),
    ("winter_extension(cyclic_perm(3),5)", 234375, 78125),
)


def suite_fitting_escalation(ctx: SuiteContext):
    for spec, order, vorder in FITTING:
        G = ctx.group(spec)

        def run(G=G):
            F = S.fitting_subgroup(G)
            return {"order": G.order, "irrational": bool(I.is_irrational(G)),
                    "fitting_order": F.order, "fitting_length": S.fitting_length(G)}

        ctx.check("irrational, F = V, Fitting length 2", spec,
                  {"order": order, "irrational": True, "fitting_order": vorder, "fitting_length": 2}, run)
    R = ctx.group("regular_module_extension(cyclic(3),5)")
    ctx.check("F(C_5^3 x| C_3) is exactly the module V", "regular_module_extension(cyclic(3),5)", True,
              lambda: S.fitting_subgroup(R) == R.base_subgroup())
    ctx.check("gcd(p-1, |G|) = 1 for p = 5, |G| = 3", "regular_module_extension(cyclic(3),5)", 1,
              lambda: math.gcd(5 - 1, 3))
    ctx.oracle_item()


def suite_winter_nonabelian_sylow(ctx: SuiteContext):
    spec = "winter_extension(cyclic_perm(3),5)"
    W = ctx.group(spec)

    def run():
        P = S.sylow(W, 5).as_group()
        H, V = W.H, W.A
        faithful = all(any(W.act(h)(v) != v for v in V.generators) for h in H.elements if h != H.identity)
        center_fixed = all(W.act(h)((V.identity[0], 1)) == (V.identity[0], 1) for h in H.elements)
        return {"order": W.order, "irrational": bool(I.is_irrational(W)), "sylow5_order": P.order,
                "sylow5_abelian": S.is_abelian(P), "faithful": faithful, "center_fixed": center_fixed}

    ctx.check("5^(1+6) x| C_3 is irrational with non-abelian Sylow 5 and faithful action", spec,
              {"order": 234375, "irrational": True, "sylow5_order": 78125, "sylow5_abelian": False,
               "faithful": True, "center_fixed": True}, run)
    E = ctx.group("extraspecial(5,1)")
    ctx.check("5^(1+2) of exponent 5 is irrational", "extraspecial(5,1)", True,
              lambda: verdict_pair(E, I.is_irrational(E)))
    ctx.oracle_item()


def suite_wreath_counterexample(ctx: SuiteContext):
    spec = "wreath_product(cyclic(3),cyclic_perm(3))"
    G = ctx.group(spec)
    ctx.check("|C_3 wr C_3| = 81", spec, 81, lambda: G.order)

    def run():
        v = I.is_irrational(G)
        ok = v.witness is not None and v.witness.holds(G)
        return {"irrational": bool(v), "witness_valid": ok}, witness_dict(G, v.witness)

    ctx.check("C_3 wr C_3 is not irrational", spec, {"irrational": False, "witness_valid": True}, run)
    ctx.oracle_item()


MINIMAL_NONABELIAN = (
    "minimal_nonabelian_p(2,1,1)",
    "minimal_nonabelian_p(2,2,1)",
    "minimal_nonabelian_p(3,1,1)",
    "minimal_nonabelian_p(3,2,1)",
    "minimal_nonabelian_p(5,1,1)",
    "minimal_nonabelian_qp(2,3,1)",
    "minimal_nonabelian_qp(5,3,1)",
    "minimal_nonabelian_qp(3,5,1)",
)


def noncommuting_pairs_generate(G: Group, rng, samples: int = 200, exhaustive_below: int = 500) -> bool:
    """Every non-commuting pair generates G.

    Exhaustive (up to conjugacy of x and x-cosets of y) below the threshold,
    otherwise over seeded random pairs.
    """
    n = G.order
    e = G.elements
    if n < exhaustive_below:
        cl = G.classes()
        for r in cl.reps:
            x = e[r]
            xs = S.cyclic_mask(G, x)
            seen = np.zeros(n, dtype=bool)
            for j in range(n):
                if seen[j]:
                    continue
                y = e[j]
                # <x, y> = <x, x^i y>: skip the rest of the coset <x> y
                seen[G.right_table(j)[xs]] = True
                if G.mul(x, y) == G.mul(y, x):
                    continue
                if G.closure_mask([r, j]).sum() != n:
                    return False
        return True
    done = 0
    while done < samples:
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        if G.mul(e[i], e[j]) == G.mul(e[j], e[i]):
            continue
        done += 1
        if G.closure_mask([i, j]).sum() != n:
            return False
    return True


def suite_minimal_nonabelian(ctx: SuiteContext):
    for spec in MINIMAL_NONABELIAN:
        G = ctx.group(spec)

        def run(G=G):
            v = I.is_irrational(G)
            return {"irrational": bool(v),
                    "pairs_generate": noncommuting_pairs_generate(G, ctx.rng)}, witness_dict(G, v.witness)

        ctx.check("minimal non-abelian: irrational, non-commuting pairs generate", spec,
                  {"irrational": True, "pairs_generate": True}, run)
    ctx.oracle_item()


SQUAREFREE_NILPOTENT = (
    "elementary_abelian(2,4)",
    "elementary_abelian(3,4)",
    "extraspecial(3,1)",
    "extraspecial(5,1)",
    "extraspecial(3,2)",
    "minimal_nonabelian_p(3,1,1)",
    "cyclic(30)",
    "abelian(6,10)",
    "direct_product(extraspecial(3,1),elementary_abelian(2,2))",
    "direct_product(extraspecial(3,1),extraspecial(5,1))",
)


def suite_squarefree_nilpotent(ctx: SuiteContext):
    for spec in SQUAREFREE_NILPOTENT:
        G = ctx.group(spec)

        def run(G=G):
            ex = S.exponent(G)
            return {"nilpotent": S.is_nilpotent(G),
                    "squarefree_exponent": all(ex % (p * p) for p in primefactors(ex)),
                    "irrational": bool(I.is_irrational(G))}

        ctx.check("nilpotent with squarefree exponent => irrational", spec,
                  {"nilpotent": True, "squarefree_exponent": True, "irrational": True}, run)
    ctx.oracle_item()


def suite_p3_groups(ctx: SuiteContext):
    for p in (3, 5, 7):
        E = ctx.group(f"extraspecial({p},1)")
        ctx.check(f"exponent-{p} group of order {p}^3 is irrational", E.spec, True,
                  lambda E=E: verdict_pair(E, I.is_irrational(E)))
        M = ctx.group(f"metacyclic({p * p},{p},{1 + p})")
        ctx.check(f"exponent-{p * p} group of order {p}^3 is not irrational", M.spec, False,
                  lambda M=M: verdict_pair(M, I.is_irrational(M)))
    ctx.oracle_item()


def suite_desk_scale_substitutions(ctx: SuiteContext):
    for desc, reason in (
        ("census of irrational groups of order 2^9", "needs an isomorphism-classified catalog; see lem_sylow2irr, bound_lemma"),
        ("2G2(q), 2F4(q), PSU(4,2^m), PSU(5,2^m)", "too large; small witnesses in thm_2simple_witnesses"),
        ("central extension by C_3^13", "arbitrary extensions out of scope"),
        ("perfect group of order 2^12.3^2.5", "not constructed"),
        ("central product C_3^4 x| 5^(1+2)", "acting kernel unspecified"),
    ):
        ctx.skip(desc, "-", reason)


SUITES = {
    "catalog_orders": suite_catalog_orders,
    "thm_2simple_psl": suite_thm_2simple_psl,
    "thm_2simple_witnesses": suite_thm_2simple_witnesses,
    "thm_2simple_sz_j1": suite_thm_2simple_sz_j1,
    "lem_sylow2irr": suite_lem_sylow2irr,
    "lem_pinormal": suite_lem_pinormal,
    "bound_lemma": suite_bound_lemma,
    "thm_main_consequences": suite_thm_main_consequences,
    "thm_pirr_consequences": suite_thm_pirr_consequences,
    "three_irrational_simple": suite_three_irrational_simple,
    "prop_collapse_metacyclic": suite_prop_collapse_metacyclic,
    "prop_collapse_supersolvable_certified": suite_prop_collapse_supersolvable_certified,
    "prop_frobenius": suite_prop_frobenius,
    "fitting_escalation": suite_fitting_escalation,
    "winter_nonabelian_sylow": suite_winter_nonabelian_sylow,
    "wreath_counterexample": suite_wreath_counterexample,
    "minimal_nonabelian": suite_minimal_nonabelian,
    "smallgroup16_search": suite_smallgroup16_search,
    "squarefree_nilpotent": suite_squarefree_nilpotent,
    "p3_groups": suite_p3_groups,
    "desk_scale_substitutions": suite_desk_scale_substitutions,
}


class UnknownSuite(KeyError):
    pass


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuite(name)
    ctx = SuiteContext(name, seed)
    t = time.perf_counter()
    SUITES[name](ctx)
    ctx.result.seconds = time.perf_counter() - t
    return ctx.result
