"""Arithmetic in GF(p^k) with an explicit irreducible modulus.

Elements are coefficient vectors (constant term first) reduced modulo the
context's modulus.  Every element also has an integer code
``sum(c_i * p**i)``; matrix code in :mod:`irratio.matrices` works on codes and
uses the lookup tables exposed by :class:`FieldCtx`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from sympy import factorint, isprime

MAX_FIELD_SIZE = 2**20


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over Z/p."""
    a = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _poly_trim(a)
    return a


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial-division irreducibility test for a monic polynomial over Z/p."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not poly_mod(list(m), divisor, p):
                return False
    return True


def lowest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree k, ordered by leading coefficients first."""
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        tail = [(n // p**i) % p for i in range(k)]
        m = tail + [1]
        if tail[0] == 0:
            continue
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """The field GF(p^k) = (Z/p)[X] / (modulus)."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(list(self.modulus), self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def label(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    # element construction -------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self._reduce([value]))
        return FieldElement(self, self._reduce(list(value)))

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        r = poly_mod(coeffs, list(self.modulus), self.p)
        return tuple(r + [0] * (self.k - len(r)))

    def from_code(self, code: int) -> FieldElement:
        coeffs = []
        for _ in range(self.k):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return self(1)

    @property
    def gen(self) -> FieldElement:
        """The class of X."""
        return self([0, 1])

    def elements(self):
        for code in range(self.q):
            yield self.from_code(code)

    # code tables for fast matrix arithmetic --------------------------------
    @cached_property
    def add_table(self) -> list[list[int]]:
        q = self.q
        if self.k == 1:
            return [[(a + b) % q for b in range(q)] for a in range(q)]
        if self.p == 2:
            return [[a ^ b for b in range(q)] for a in range(q)]
        els = [self.from_code(c) for c in range(q)]
        return [[int(x + y) for y in els] for x in els]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        q = self.q
        if self.k == 1:
            return [[(a * b) % q for b in range(q)] for a in range(q)]
        els = [self.from_code(c) for c in range(q)]
        return [[int(x * y) for y in els] for x in els]

    @cached_property
    def neg_table(self) -> list[int]:
        return [int(-self.from_code(c)) for c in range(self.q)]

    @cached_property
    def inv_table(self) -> list[int]:
        out = [0] * self.q
        for c in range(1, self.q):
            out[c] = int(self.from_code(c).inverse())
        return out

    def frobenius_table(self, i: int) -> list[int]:
        return [int(frobenius(self.from_code(c), i)) for c in range(self.q)]


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.ctx(other)
        if other.ctx != self.ctx:
            raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        prod = poly_mul(list(self.coeffs), list(other.coeffs), self.ctx.p)
        return FieldElement(self.ctx, self.ctx._reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in " + repr(self.ctx))
        return self ** (self.ctx.q - 2)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __int__(self):
        p = self.ctx.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"{self.ctx.label}{list(self.coeffs)}"

    def order(self) -> int:
        """Multiplicative order."""
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.ctx.q - 1
        for ell in factorint(n):
            while n % ell == 0 and self ** (n // ell) == self.ctx.one:
                n //= ell
        return n


def make_field(p: int, k: int = 1) -> FieldCtx:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= 16:
        raise ValueError(f"extension degree {k} out of range 1..16")
    if p**k > MAX_FIELD_SIZE:
        raise ValueError(f"GF({p}^{k}) exceeds the {MAX_FIELD_SIZE}-element cap")
    return _make_field_cached(p, k)


_FIELDS: dict[tuple[int, int], FieldCtx] = {}


def _make_field_cached(p: int, k: int) -> FieldCtx:
    key = (p, k)
    if key not in _FIELDS:
        _FIELDS[key] = FieldCtx(p, k, lowest_irreducible(p, k))
    return _FIELDS[key]


def field_of_order(q: int) -> FieldCtx:
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, k),) = fac.items()
    return make_field(p, k)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.ctx != b.ctx:
        raise ValueError("field mismatch")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def frobenius(a: FieldElement, i: int = 1) -> FieldElement:
    """a -> a^(p^i)."""
    return a ** (a.ctx.p**i)


def subfield_size(ctx: FieldCtx) -> int:
    if ctx.k % 2:
        raise ValueError(f"{ctx} is not a quadratic extension")
    return ctx.p ** (ctx.k // 2)


def relative_trace(a: FieldElement) -> FieldElement:
    """Trace from F_{q^2} down to F_q: a + a^q."""
    return a + a ** subfield_size(a.ctx)


def relative_norm(a: FieldElement) -> FieldElement:
    """Norm from F_{q^2} down to F_q: a^(1+q)."""
    return a ** (1 + subfield_size(a.ctx))


def _solve_mod_p(rows: list[list[int]], rhs: list[int], p: int):
    """Gaussian elimination over Z/p. Returns (particular solution, kernel basis) or None."""
    n_rows, n_cols = len(rows), len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] for row in aug):
        return None
    x = [0] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    kernel = []
    for free in (c for c in range(n_cols) if c not in pivots):
        v = [0] * n_cols
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = (-aug[i][free]) % p
        kernel.append(v)
    return x, kernel


def solve_artin_schreier(ctx2: FieldCtx, c: FieldElement) -> FieldElement:
    """Solve y^q + y = c in F_{q^2}; returns the solution with least integer code.

    The map y -> y^q + y is F_p-linear, so this is a linear solve over the
    prime field followed by a scan of the q-element solution coset.
    """
    q = subfield_size(ctx2)
    c = ctx2(c)
    k, p = ctx2.k, ctx2.p
    images = [(ctx2.from_code(p**j) ** q + ctx2.from_code(p**j)).coeffs for j in range(k)]
    rows = [[images[j][i] for j in range(k)] for i in range(k)]
    sol = _solve_mod_p(rows, list(c.coeffs), p)
    if sol is None:
        raise ValueError(f"X^{q} + X = {c} has no solution in {ctx2}")
    x, kernel = sol
    best = None
    for combo in itertools.product(range(p), repeat=len(kernel)):
        v = list(x)
        for a, kv in zip(combo, kernel):
            if a:
                v = [(vi + a * ki) % p for vi, ki in zip(v, kv)]
        y = ctx2(v)
        if best is None or int(y) < int(best):
            best = y
    assert best ** q + best == c
    return best


def primitive_element(ctx: FieldCtx) -> FieldElement:
    """Primitive element of least integer code."""
    for code in range(1, ctx.q):
        a = ctx.from_code(code)
        if a.order() == ctx.q - 1:
            return a
    raise AssertionError("field has no primitive element")


def element_of_order(ctx: FieldCtx, n: int) -> FieldElement:
    if n < 1 or (ctx.q - 1) % n:
        raise ValueError(f"{n} does not divide {ctx.q - 1}")
    return primitive_element(ctx) ** ((ctx.q - 1) // n)


def minimal_polynomial(a: FieldElement, over: str = "prime_field") -> list:
    """Monic minimal polynomial of ``a``, constant term first.

    Over the prime field the coefficients are returned as ints mod p; over
    the subfield F_q of a quadratic extension they are field elements of
    ``a.ctx`` lying in F_q.
    """
    ctx = a.ctx
    if over == "prime_field":
        r = ctx.p
    elif over == "subfield_q":
        r = subfield_size(ctx)
    else:
        raise ValueError(f"unknown base field {over!r}")
    conjugates = [a]
    while True:
        nxt = conjugates[-1] ** r
        if nxt == a:
            break
        conjugates.append(nxt)
    poly = [ctx.one]
    for b in conjugates:
        # poly * (X - b)
        shifted = [ctx.zero] + poly
        scaled = [-b * c for c in poly] + [ctx.zero]
        poly = [u + v for u, v in zip(shifted, scaled)]
    if over == "prime_field":
        assert all(all(x == 0 for x in c.coeffs[1:]) for c in poly)
        return [c.coeffs[0] for c in poly]
    return poly


def companion_matrix(poly, ctx: FieldCtx | None = None) -> tuple[tuple[int, ...], ...]:
    """Companion matrix (integer codes) with characteristic polynomial ``poly``.

    Ones sit on the subdiagonal and the last column holds the negated
    lower coefficients, so X^2+X+1 over GF(5) gives [[0,4],[1,4]].
    """
    if ctx is None:
        raise ValueError("companion_matrix needs the coefficient field")
    coeffs = [ctx(c) if not isinstance(c, FieldElement) else c for c in poly]
    if not coeffs or coeffs[-1] != ctx.one:
        raise ValueError("companion matrix needs a monic polynomial")
    r = len(coeffs) - 1
    if r < 1:
        raise ValueError("companion matrix needs degree >= 1")
    rows = []
    for i in range(r):
        row = [0] * r
        if i > 0:
            row[i - 1] = 1
        row[r - 1] = int(-coeffs[i])
        rows.append(tuple(row))
    return tuple(rows)


def parse_poly(text: str) -> tuple[list[int], int]:
    """Parse ``x^2+x+1@5`` into (coefficients constant first, p)."""
    body, _, mod = text.replace(" ", "").partition("@")
    if not mod:
        raise ValueError(f"polynomial {text!r} lacks '@p'")
    p = int(mod)
    coeffs: dict[int, int] = {}
    for term in body.replace("-", "+-").split("+"):
        if not term:
            continue
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        if "x" in term.lower():
            c, _, e = term.lower().partition("x")
            c = c.rstrip("*")
            coef = int(c) if c else 1
            exp = int(e.lstrip("^")) if e else 1
        else:
            coef, exp = int(term), 0
        coeffs[exp] = (coeffs.get(exp, 0) + sign * coef) % p
    deg = max(coeffs, default=0)
    return [coeffs.get(i, 0) for i in range(deg + 1)], p


def format_poly(coeffs, p: int) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i] % p
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return ("+".join(terms) or "0") + f"@{p}"
