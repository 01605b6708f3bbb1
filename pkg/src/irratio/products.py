"""Direct, semidirect, wreath and central products, quotients, and actions."""
from __future__ import annotations

import numpy as np
from sympy import isprime
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .group import (
    Group,
    InvalidAction,
    NotNormal,
    PermGroup,
    Subgroup,
    VectorGroup,
)


class Automorphism:
    """An automorphism of a target group, callable on its elements."""

    def __init__(self, fn, matrix=None, p=None):
        self.fn = fn
        self.matrix = matrix
        self.p = p

    def __call__(self, a):
        return self.fn(a)

    def then(self, other: "Automorphism") -> "Automorphism":
        """self o other (apply other first)."""
        if self.matrix is not None and other.matrix is not None:
            return matrix_aut(_matmul_mod(self.matrix, other.matrix, self.p), self.p)
        f, g = self.fn, other.fn
        return Automorphism(lambda a: f(g(a)))


def _row_moduli(p, d):
    return tuple(p) if isinstance(p, (tuple, list)) else (p,) * d


def _matmul_mod(a, b, p):
    d = len(a)
    mods = _row_moduli(p, d)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(d)) % mods[i] for j in range(d)) for i in range(d)
    )


def matrix_aut(rows, p) -> Automorphism:
    """Linear map v -> M v on Z_{m_1} x ... x Z_{m_d}; ``p`` is a prime or the moduli tuple.

    Row i is read mod m_i.  Whether it is a well-defined automorphism is left
    to the caller (ActionMap checks it).
    """
    d = len(rows)
    mods = _row_moduli(p, d)
    rows = tuple(tuple(int(x) % m for x in r) for r, m in zip(rows, mods))

    def apply(v):
        return tuple(sum(c * x for c, x in zip(row, v)) % m for row, m in zip(rows, mods))

    return Automorphism(apply, matrix=rows, p=p)


def identity_aut() -> Automorphism:
    return Automorphism(lambda a: a)


def coordinate_permutation(h) -> Automorphism:
    """(h.f)[h(i)] = f[i] on tuples indexed by the points h moves."""

    def apply(f):
        out = [None] * len(h)
        for i, j in enumerate(h):
            out[j] = f[i]
        return tuple(out)

    return Automorphism(apply)


def _det_mod_p(rows, p) -> int:
    m = [list(r) for r in rows]
    d = len(m)
    det = 1
    for c in range(d):
        piv = next((r for r in range(c, d) if m[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for r in range(c + 1, d):
            f = m[r][c] * inv % p
            m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return det % p


class ActionMap:
    """Homomorphism H -> Aut(A) given by images of H's generators.

    Construction verifies, eagerly and on every element, that each image is
    an automorphism of A and that the assignment extends consistently to a
    homomorphism on the enumerated H.  ``rule`` may supply act(h) for every h
    directly; it is then checked against the same homomorphism condition.
    """

    def __init__(self, acting: Group, target: Group, images=None, rule=None, check=True):
        self.acting = acting
        self.target = target
        if images is None:
            if rule is None:
                raise InvalidAction("need generator images or a rule")
            images = [rule(h) for h in acting.generators]
        images = [self._coerce(im) for im in images]
        if len(images) != len(acting.generators):
            raise InvalidAction("one image per generator of the acting group is required")
        self.images = images
        self._rule = rule
        if check:
            for t, im in enumerate(images):
                self._check_automorphism(im, t)
        self._table = self._extend(check)

    def _coerce(self, im):
        if isinstance(im, Automorphism):
            return im
        if isinstance(im, dict):
            table = dict(im)
            return Automorphism(table.__getitem__)
        if callable(im):
            return Automorphism(im)
        # matrix given as rows
        if not isinstance(self.target, VectorGroup):
            raise InvalidAction("matrix images need a vector group target")
        mods = self.target.moduli
        if len(im) != len(mods) or any(len(r) != len(mods) for r in im):
            raise InvalidAction(f"matrix image must be {len(mods)}x{len(mods)}")
        return matrix_aut(im, mods[0] if len(set(mods)) == 1 else mods)

    def _check_automorphism(self, aut: Automorphism, t: int):
        A = self.target
        if aut.matrix is not None and not isinstance(aut.p, (tuple, list)) and isprime(aut.p):
            d = len(aut.matrix)
            if d != len(A.moduli) or _det_mod_p(aut.matrix, A.moduli[0]) == 0:
                raise InvalidAction(f"image of generator {t} is not an invertible {len(A.moduli)}x{len(A.moduli)} matrix")
            return
        elems = A.elements
        images = [aut(a) for a in elems]
        if len(set(images)) != len(elems) or any(y not in A for y in images):
            raise InvalidAction(f"image of generator {t} is not a bijection of the target")
        for s in A.generators:
            fs = aut(s)
            for a, fa in zip(elems, images):
                if aut(A.mul(a, s)) != A.mul(fa, fs):
                    raise InvalidAction(f"image of generator {t} is not a homomorphism")

    def _agree(self, f: Automorphism, g: Automorphism) -> bool:
        return all(f(s) == g(s) for s in self.target.generators)

    def _extend(self, check: bool) -> dict:
        H = self.acting
        elems = H.enumerate()
        n = len(elems)
        acts: list = [None] * n
        if self._rule is not None:
            acts = [self._coerce(self._rule(h)) for h in elems]
        else:
            acts[0] = identity_aut()
            for ch, pa, ge in H._enum.layers:
                for c, p, t in zip(ch.tolist(), pa.tolist(), ge.tolist()):
                    acts[c] = self.images[t].then(acts[p])
            acts = [self._materialise(a) for a in acts]
        if check:
            if not self._agree(acts[0], identity_aut()):
                raise InvalidAction("identity of the acting group does not act trivially")
            left = H._enum.left
            for t, im in enumerate(self.images):
                for i in range(n):
                    if not self._agree(acts[left[t, i]], im.then(acts[i])):
                        raise InvalidAction(
                            f"generator images do not extend to a homomorphism (generator {t})"
                        )
        return {h: a for h, a in zip(elems, acts)}

    def _materialise(self, aut: Automorphism) -> Automorphism:
        if aut.matrix is not None:
            return aut
        A = self.target
        if A._enum is not None and A.order <= 20000:
            table = {a: aut(a) for a in A.elements}
            return Automorphism(table.__getitem__)
        return aut

    def __call__(self, h) -> Automorphism:
        return self._table[h]

    def is_trivial(self) -> bool:
        return all(self._agree(a, identity_aut()) for a in self._table.values())


def trivial_action(H: Group, A: Group) -> ActionMap:
    return ActionMap(H, A, [identity_aut() for _ in H.generators], check=False)



class DirectProduct(Group):
    kind = "tuple"

    def __init__(self, *factors: Group, spec: str = ""):
        self.factors = factors
        self.identity = tuple(f.identity for f in factors)
        gens = []
        for i, f in enumerate(factors):
            for g in f.generators:
                if g == f.identity:
                    continue
                e = list(self.identity)
                e[i] = g
                gens.append(tuple(e))
        super().__init__(gens, spec)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def fmt(self, a):
        return "(" + " ; ".join(f.fmt(x) for f, x in zip(self.factors, a)) + ")"


def direct_product(A: Group, B: Group, spec: str = "") -> DirectProduct:
    return DirectProduct(A, B, spec=spec or f"direct_product({A.spec},{B.spec})")


class SemidirectProduct(Group):
    """A x| H with (a,h)(a',h') = (a * act(h)(a'), h h')."""

    kind = "tuple"

    def __init__(self, A: Group, H: Group, act: ActionMap, spec: str = "", generators=None):
        if act.acting is not H or act.target is not A:
            raise InvalidAction("action does not connect the given groups")
        self.A, self.H, self.act = A, H, act
        self._acts = act._table
        self.identity = (A.identity, H.identity)
        if generators is None:
            generators = [(a, H.identity) for a in A.generators if a != A.identity] + [
                (A.identity, h) for h in H.generators
            ]
        super().__init__(generators, spec)

    def mul(self, x, y):
        a, h = x
        b, k = y
        return (self.A.mul(a, self._acts[h](b)), self.H.mul(h, k))

    def inv(self, x):
        a, h = x
        hi = self.H.inv(h)
        return (self._acts[hi](self.A.inv(a)), hi)

    def fmt(self, x):
        return "(" + self.A.fmt(x[0]) + " ; " + self.H.fmt(x[1]) + ")"

    def base_subgroup(self) -> Subgroup:
        return self.subgroup([(a, self.H.identity) for a in self.A.generators])

    def complement_subgroup(self) -> Subgroup:
        return self.subgroup([(self.A.identity, h) for h in self.H.generators])


def semidirect_product(A: Group, H: Group, act: ActionMap, spec: str = "", generators=None):
    return SemidirectProduct(A, H, act, spec or f"semidirect_product({A.spec},{H.spec})", generators)


def wreath_product(A: Group, H: PermGroup, spec: str = "") -> SemidirectProduct:
    """A wr H for H acting on n points: base A^n, H permuting coordinates."""
    if not isinstance(H, PermGroup):
        raise TypeError("wreath product needs a permutation group on top")
    n = H.degree
    base = DirectProduct(*([A] * n), spec=f"{A.spec}^{n}")
    act = ActionMap(H, base, rule=coordinate_permutation, check=False)
    gens = []
    if n:
        for a in A.generators:
            e = [A.identity] * n
            e[0] = a
            gens.append((tuple(e), H.identity))
    gens += [(base.identity, h) for h in H.generators]
    # cheap consistency check of the coordinate action on generators of H
    for h in H.generators:
        for s in base.generators:
            if act(h)(s) not in base:
                raise InvalidAction("coordinate action leaves the base group")
    return SemidirectProduct(base, H, act, spec or f"wreath_product({A.spec},{H.spec})", gens)


class CentralProduct(Group):
    """(A x B) / {(z, iso(z)^-1)}; elements are least pair representatives."""

    kind = "tuple"

    def __init__(self, A: Group, B: Group, iso: dict, spec: str = ""):
        self.A, self.B = A, B
        for za, zb in iso.items():
            if za not in A or zb not in B:
                raise InvalidAction("identified elements must lie in the factors")
            if any(A.mul(za, g) != A.mul(g, za) for g in A.generators):
                raise InvalidAction(f"{A.fmt(za)} is not central in {A.spec}")
            if any(B.mul(zb, g) != B.mul(g, zb) for g in B.generators):
                raise InvalidAction(f"{B.fmt(zb)} is not central in {B.spec}")
        for za, zb in iso.items():
            for wa, wb in iso.items():
                if iso.get(A.mul(za, wa)) != B.mul(zb, wb):
                    raise InvalidAction("identification is not an isomorphism")
        if len(set(iso.values())) != len(iso):
            raise InvalidAction("identification is not injective")
        self.iso = iso
        self._pairs = [(za, B.inv(zb)) for za, zb in iso.items()]
        self.identity = (A.identity, B.identity)
        gens = [self.canonical((a, B.identity)) for a in A.generators] + [
            self.canonical((A.identity, b)) for b in B.generators
        ]
        super().__init__(gens, spec)

    def canonical(self, x):
        a, b = x
        return min((self.A.mul(a, za), self.B.mul(b, zb)) for za, zb in self._pairs)

    def mul(self, x, y):
        return self.canonical((self.A.mul(x[0], y[0]), self.B.mul(x[1], y[1])))

    def inv(self, x):
        return self.canonical((self.A.inv(x[0]), self.B.inv(x[1])))

    def fmt(self, x):
        return "(" + self.A.fmt(x[0]) + " ; " + self.B.fmt(x[1]) + ")"


def central_product(A: Group, B: Group, iso: dict, spec: str = "") -> CentralProduct:
    return CentralProduct(A, B, iso, spec or f"central_product({A.spec},{B.spec})")


def left_cosets(G: Group, N: Subgroup) -> np.ndarray:
    """labels[i] = number of the left coset x_i N, numbered by least element."""
    n = G.order
    tables = [G.right_table(i) for i in N.gens]
    if not tables:
        return np.arange(n)
    src = np.tile(np.arange(n), len(tables))
    dst = np.concatenate(tables)
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n)).tocsr()
    _, raw = connected_components(graph, directed=True, connection="weak")
    first = np.full(raw.max() + 1, n)
    np.minimum.at(first, raw, np.arange(n))
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(first.size)
    return rank[raw]


def quotient_group(G: Group, N: Subgroup, spec: str = "") -> PermGroup:
    """G/N as the permutation action of G's generators on left cosets of N."""
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.spec}")
    labels = left_cosets(G, N)
    m = int(labels.max()) + 1
    first = np.full(m, G.order)
    np.minimum.at(first, labels, np.arange(G.order))
    left = G._enum_left()
    gens = [tuple(int(x) for x in labels[left[t][first]]) for t in range(len(G.generators))]
    return PermGroup(m, gens, spec or f"quotient({G.spec},{N.order})")
