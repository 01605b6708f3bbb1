"""Group-spec language: parse, print and build.

    spec   := name "(" [arg ("," arg)*] ")"
    arg    := int | poly | perm | matrix | spec
    poly   := terms "@" p                      e.g. x^2+x+1@5
    perm   := cycle+                           e.g. (1 2 3)(4 5), () for the identity
    matrix := "[" rows "]" ["@GF(" p ["^" k] ")"]

Entries of a matrix over GF(p^k), k > 1, are coefficient lists.  A matrix
without a field suffix is an integer matrix acting on a vector group with
mixed moduli.  Names are case-insensitive; aliases resolve to canonical
names so that ``parse(str(node)) == node``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from . import constructions as C
from . import products as P
from .field import companion_matrix, format_poly, make_field, parse_poly
from .group import Group, MatrixGroup, PermGroup, VectorGroup, parse_perm
from . import matrices
from . import structure

MAX_DEPTH = 8


class SpecError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} at position {pos}")


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...]
    p: int

    def __str__(self):
        return format_poly(self.coeffs, self.p)


@dataclass(frozen=True)
class Perm:
    cycles: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles) or "()"

    def degree(self) -> int:
        return max((x for c in self.cycles for x in c), default=0)


@dataclass(frozen=True)
class Matrix:
    rows: tuple
    p: int | None = None
    k: int = 1

    def __str__(self):
        def ent(x):
            return "[" + ",".join(map(str, x)) + "]" if isinstance(x, tuple) else str(x)

        body = "[" + ",".join("[" + ",".join(ent(x) for x in r) + "]" for r in self.rows) + "]"
        if self.p is None:
            return body
        return body + (f"@GF({self.p})" if self.k == 1 else f"@GF({self.p}^{self.k})")


@dataclass(frozen=True)
class GroupSpecNode:
    name: str
    args: tuple = ()

    def __str__(self):
        return f"{self.name}(" + ",".join(str(a) for a in self.args) + ")"

    def depth(self) -> int:
        inner = [a.depth() for a in self.args if isinstance(a, GroupSpecNode)]
        return 1 + max(inner, default=0)


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise SpecError(f"expected {ch!r}", self.i)
        self.i += 1

    def ident(self) -> str:
        self.ws()
        j = self.i
        while self.i < len(self.s) and (self.s[self.i].isalnum() or self.s[self.i] == "_"):
            self.i += 1
        return self.s[j : self.i]

    def spec(self, depth: int = 1) -> GroupSpecNode:
        if depth > MAX_DEPTH:
            raise SpecError(f"nesting deeper than {MAX_DEPTH}", self.i)
        start = self.i
        name = self.ident()
        if not name or not name[0].isalpha():
            raise SpecError("expected a constructor name", start)
        canon = canonical_name(name)
        if canon is None:
            raise SpecError(f"unknown constructor {name!r}", start)
        self.expect("(")
        args = []
        if self.peek() != ")":
            while True:
                args.append(self.arg(depth))
                if self.peek() == ",":
                    self.i += 1
                    continue
                break
        self.expect(")")
        return GroupSpecNode(canon, tuple(args))

    def _raw_token(self) -> str:
        """Text up to the next ',' or ')' at bracket depth zero."""
        self.ws()
        j, lvl = self.i, 0
        while self.i < len(self.s):
            ch = self.s[self.i]
            if ch in "([":
                lvl += 1
            elif ch in ")]":
                if lvl == 0:
                    break
                lvl -= 1
            elif ch == "," and lvl == 0:
                break
            self.i += 1
        return self.s[j : self.i].strip()

    def arg(self, depth: int):
        ch = self.peek()
        if ch == "(":
            return self.perm()
        if ch == "[":
            return self.matrix()
        if ch.isalpha() and ch.lower() != "x":
            return self.spec(depth + 1)
        if ch.isalpha():
            # an identifier starting with x is a constructor only if '(' follows
            save = self.i
            name = self.ident()
            if self.peek() == "(" and canonical_name(name) is not None:
                self.i = save
                return self.spec(depth + 1)
            self.i = save
        start = self.i
        tok = self._raw_token()
        if not tok:
            raise SpecError("empty argument", start)
        if "@" in tok or "x" in tok.lower():
            try:
                coeffs, p = parse_poly(tok)
            except ValueError as exc:
                raise SpecError(f"bad polynomial {tok!r}: {exc}", start) from None
            return Poly(tuple(coeffs), p)
        try:
            return int(tok)
        except ValueError:
            raise SpecError(f"bad argument {tok!r}", start) from None

    def perm(self) -> Perm:
        cycles = []
        while self.peek() == "(":
            self.i += 1
            j = self.s.find(")", self.i)
            if j < 0:
                raise SpecError("unterminated cycle", self.i)
            body = self.s[self.i : j].replace(",", " ").split()
            try:
                cyc = tuple(int(x) for x in body)
            except ValueError:
                raise SpecError(f"bad cycle ({self.s[self.i:j]})", self.i) from None
            if any(x < 1 for x in cyc):
                raise SpecError("cycle points are 1-based", self.i)
            if len(cyc) > 1:
                cycles.append(cyc)
            self.i = j + 1
        points = [x for c in cycles for x in c]
        if len(points) != len(set(points)):
            raise SpecError("cycles must be disjoint", self.i)
        return Perm(tuple(cycles))

    def _nested(self):
        self.expect("[")
        items = []
        if self.peek() != "]":
            while True:
                if self.peek() == "[":
                    items.append(self._nested())
                else:
                    self.ws()
                    j = self.i
                    while self.i < len(self.s) and (self.s[self.i].isdigit() or self.s[self.i] == "-"):
                        self.i += 1
                    try:
                        items.append(int(self.s[j : self.i]))
                    except ValueError:
                        raise SpecError("bad matrix entry", j) from None
                if self.peek() == ",":
                    self.i += 1
                    continue
                break
        self.expect("]")
        return tuple(items)

    def matrix(self) -> Matrix:
        start = self.i
        rows = self._nested()
        if not rows or any(not isinstance(r, tuple) or len(r) != len(rows) for r in rows):
            raise SpecError("matrix must be a square list of rows", start)
        p, k = None, 1
        if self.peek() == "@":
            self.i += 1
            if self.ident().upper() != "GF":
                raise SpecError("expected GF(...) after '@'", self.i)
            self.expect("(")
            tok = self._raw_token()
            self.expect(")")
            base, _, ex = tok.partition("^")
            try:
                p, k = int(base), int(ex) if ex else 1
            except ValueError:
                raise SpecError(f"bad field {tok!r}", start) from None
        for r in rows:
            for x in r:
                if isinstance(x, tuple) and (k == 1 or len(x) > k):
                    raise SpecError("coefficient-list entries need GF(p^k) with enough degree", start)
        if p is not None:
            rows = tuple(tuple(x % p if isinstance(x, int) else tuple(c % p for c in x) for x in r) for r in rows)
        return Matrix(rows, p, k)


def parse_group_spec(text: str) -> GroupSpecNode:
    ps = _Parser(text)
    node = ps.spec()
    if ps.peek():
        raise SpecError("trailing input", ps.i)
    validate(node)
    return node


# -- registry -------------------------------------------------------------------

ALIASES = {
    "elemab": "elementary_abelian",
    "sz": "suzuki",
    "direct": "direct_product",
    "semidirect": "semidirect_product",
    "wreath": "wreath_product",
    "central": "central_product",
    "winter": "winter_extension",
    "perm": "perm_group",
    "matgroup": "matrix_group",
}

CLASSICAL = {f.lower(): f for f in C.CLASSICAL_FAMILIES}

# name -> tuple of argument kinds; '*' suffix marks a repeated tail
SIGNATURES = {
    "cyclic": ("int",),
    "abelian": ("int*",),
    "elementary_abelian": ("int", "int"),
    "cyclic_perm": ("int",),
    "symmetric": ("int",),
    "alternating": ("int",),
    "dihedral": ("int",),
    "quaternion": ("int",),
    "suzuki": ("int",),
    "suzuki_2group": ("int",),
    "psu3_unipotent_even": ("int",),
    "j1": (),
    "singer_frobenius": ("int",),
    "extraspecial": ("int", "int"),
    "winter_extension": ("group", "int"),
    "minimal_nonabelian_p": ("int", "int", "int"),
    "minimal_nonabelian_qp": ("int", "int", "int"),
    "metacyclic": ("int", "int", "int"),
    "regular_module_extension": ("group", "int"),
    "matrix_module_extension": ("group", "matrix*"),
    "suzuki_frobenius_example": ("int", "int"),
    "direct_product": ("group", "group*"),
    "semidirect_product": ("group", "group", "matrix*"),
    "wreath_product": ("group", "group"),
    "central_product": ("group", "group"),
    "perm_group": ("int", "perm*"),
    "matrix_group": ("matrix", "matrix*"),
    "companion": ("poly",),
    **{f: ("int", "int") for f in CLASSICAL},
}

VALUE_NODES = {"companion"}


def canonical_name(name: str) -> str | None:
    n = name.lower()
    n = ALIASES.get(n, n)
    return n if n in SIGNATURES else None


def _kind_ok(kind: str, a) -> bool:
    if kind == "int":
        return isinstance(a, int)
    if kind == "poly":
        return isinstance(a, Poly)
    if kind == "perm":
        return isinstance(a, Perm)
    if kind == "matrix":
        return isinstance(a, Matrix) or (isinstance(a, GroupSpecNode) and a.name in VALUE_NODES)
    if kind == "group":
        return isinstance(a, GroupSpecNode) and a.name not in VALUE_NODES
    raise AssertionError(kind)


def validate(node: GroupSpecNode):
    if node.depth() > MAX_DEPTH:
        raise SpecError(f"nesting deeper than {MAX_DEPTH}")
    sig = SIGNATURES[node.name]
    args = node.args
    fixed = [k for k in sig if not k.endswith("*")]
    tail = [k[:-1] for k in sig if k.endswith("*")]
    if len(args) < len(fixed) or (not tail and len(args) != len(fixed)):
        raise SpecError(f"{node.name} takes {len(fixed)}{'+' if tail else ''} arguments, got {len(args)}")
    kinds = fixed + tail * (len(args) - len(fixed))
    for i, (k, a) in enumerate(zip(kinds, args)):
        if not _kind_ok(k, a):
            raise SpecError(f"argument {i + 1} of {node.name} should be a {k}, got {a}")
        if isinstance(a, GroupSpecNode):
            validate(a)


# -- builder --------------------------------------------------------------------


def _matrix_value(a, ctx_hint=None):
    """(rows, p, k) for a Matrix argument or a companion(...) node."""
    if isinstance(a, GroupSpecNode):
        poly = a.args[0]
        F = make_field(poly.p)
        return companion_matrix(list(poly.coeffs), F), poly.p, 1
    return a.rows, a.p, a.k


def _rows_to_codes(rows, p, k):
    F = make_field(p, k)

    def code(x):
        if isinstance(x, tuple):
            return sum(c * p**i for i, c in enumerate(x))
        return x % p if k == 1 else x

    return F, tuple(tuple(code(x) for x in r) for r in rows)


def _action_images(A: Group, mats):
    images = []
    for m in mats:
        rows, p, k = _matrix_value(m)
        if k != 1:
            raise SpecError("action matrices must have prime-field entries")
        if p is not None and isinstance(A, VectorGroup) and set(A.moduli) != {p}:
            raise SpecError(f"matrix over GF({p}) does not act on {A.spec}")
        images.append(rows)
    return images


def _central(A: Group, B: Group):
    """Identify cyclic centers of equal order through their least generators."""
    ZA, ZB = structure.center(A), structure.center(B)
    if ZA.order != ZB.order:
        raise SpecError("central_product needs centers of equal order")

    def gen(G, Z):
        idx = Z.indices
        orders = G.orders()[idx]
        if orders.max() != Z.order:
            raise SpecError(f"center of {G.spec} is not cyclic")
        return G.elements[int(idx[orders.argmax()])]

    za, zb = gen(A, ZA), gen(B, ZB)
    iso = {A.power(za, i): B.power(zb, i) for i in range(ZA.order)}
    return P.central_product(A, B, iso)


def build(node: GroupSpecNode | str) -> Group:
    if isinstance(node, str):
        node = parse_group_spec(node)
    G = _build(node)
    G.spec = str(node)
    return G


def _build(node: GroupSpecNode) -> Group:
    n, a = node.name, node.args
    sub = [build(x) if isinstance(x, GroupSpecNode) and x.name not in VALUE_NODES else x for x in a]
    if n in CLASSICAL:
        return C.classical(CLASSICAL[n], *a)
    simple = {
        "cyclic": C.cyclic,
        "abelian": C.abelian,
        "elementary_abelian": C.elementary_abelian,
        "cyclic_perm": C.cyclic_perm,
        "symmetric": C.symmetric,
        "alternating": C.alternating,
        "dihedral": C.dihedral,
        "quaternion": C.quaternion,
        "suzuki": C.suzuki,
        "suzuki_2group": C.suzuki_2group,
        "psu3_unipotent_even": C.psu3_unipotent_even,
        "j1": C.j1,
        "singer_frobenius": C.singer_frobenius,
        "extraspecial": C.extraspecial,
        "minimal_nonabelian_p": C.minimal_nonabelian_p,
        "minimal_nonabelian_qp": C.minimal_nonabelian_qp,
        "metacyclic": C.metacyclic,
        "suzuki_frobenius_example": C.suzuki_frobenius_example,
        "winter_extension": C.winter_extension,
        "regular_module_extension": C.regular_module_extension,
        "wreath_product": P.wreath_product,
    }
    if n in simple:
        return simple[n](*sub)
    if n == "direct_product":
        return P.DirectProduct(*sub)
    if n == "central_product":
        return _central(*sub)
    if n == "semidirect_product":
        A, H, mats = sub[0], sub[1], sub[2:]
        images = _action_images(A, mats)
        act = P.ActionMap(H, A, images) if images else P.trivial_action(H, A)
        return P.SemidirectProduct(A, H, act)
    if n == "matrix_module_extension":
        G, mats = sub[0], sub[1:]
        rows = [_matrix_value(m) for m in mats]
        ps = {p for _, p, _ in rows}
        if len(ps) != 1 or None in ps:
            raise SpecError("module matrices need one common prime field")
        return C.matrix_module_extension(G, [r for r, _, _ in rows], p=ps.pop())
    if n == "perm_group":
        degree, perms = a[0], a[1:]
        if any(p.degree() > degree for p in perms):
            raise SpecError(f"permutation moves a point beyond degree {degree}")
        return PermGroup(degree, [parse_perm(str(p), degree) for p in perms])
    if n == "matrix_group":
        vals = [_matrix_value(m) for m in a]
        fields = {(p, k) for _, p, k in vals}
        if len(fields) != 1 or (None, 1) in fields:
            raise SpecError("matrix_group needs matrices over one common field")
        p, k = fields.pop()
        d = len(vals[0][0])
        gens = []
        for rows, _, _ in vals:
            F, codes = _rows_to_codes(rows, p, k)
            if len(codes) != d:
                raise SpecError("matrices of different sizes")
            gens.append(matrices.from_rows(codes, F))
        return MatrixGroup(F, d, gens)
    raise SpecError(f"{n} does not describe a group")


def cached(text: str) -> Group:
    """Build once per canonical spec text; groups are immutable after enumeration."""
    return _cached(str(parse_group_spec(text)))


@functools.lru_cache(maxsize=256)
def _cached(canon: str) -> Group:
    return build(canon)
