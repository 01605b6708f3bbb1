"""Square matrices over GF(q) stored as flat row-major tuples of field codes."""
from __future__ import annotations

from .field import FieldCtx, FieldElement


def identity(d: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(d) for j in range(d))


def entry_code(x, ctx: FieldCtx) -> int:
    if isinstance(x, FieldElement):
        return int(ctx(x))
    if ctx.k == 1:
        return x % ctx.p
    if not 0 <= x < ctx.q:
        raise ValueError(f"{x} is not a field code of {ctx}")
    return x


def from_rows(rows, ctx: FieldCtx) -> tuple[int, ...]:
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("matrix is not square")
    return tuple(entry_code(x, ctx) for r in rows for x in r)


def rows_of(m, d: int) -> list[tuple[int, ...]]:
    return [tuple(m[i * d : (i + 1) * d]) for i in range(d)]


def make_mul(ctx: FieldCtx, d: int):
    """Return a fast product function for d x d matrices over ``ctx``."""
    rng = range(d)
    idx = [[(i * d + t, t * d + j) for t in rng] for i in rng for j in rng]
    if ctx.k == 1:
        p = ctx.p

        def mul(a, b):
            return tuple(sum(a[u] * b[v] for u, v in cell) % p for cell in idx)

        return mul
    mt = ctx.mul_table
    if ctx.p == 2:

        def mul(a, b):
            out = []
            for cell in idx:
                s = 0
                for u, v in cell:
                    s ^= mt[a[u]][b[v]]
                out.append(s)
            return tuple(out)

        return mul
    at = ctx.add_table

    def mul(a, b):
        out = []
        for cell in idx:
            s = 0
            for u, v in cell:
                s = at[s][mt[a[u]][b[v]]]
            out.append(s)
        return tuple(out)

    return mul


def mat_mul(a, b, ctx: FieldCtx, d: int):
    return make_mul(ctx, d)(a, b)


def mat_inv(a, ctx: FieldCtx, d: int) -> tuple[int, ...]:
    """Inverse by Gauss-Jordan elimination; raises on singular input."""
    at, mt, nt, it = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    m = [list(a[i * d : (i + 1) * d]) + [1 if i == j else 0 for j in range(d)] for i in range(d)]
    for c in range(d):
        piv = next((r for r in range(c, d) if m[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = it[m[c][c]]
        m[c] = [mt[inv][x] for x in m[c]]
        for r in range(d):
            if r != c and m[r][c]:
                f = nt[m[r][c]]
                m[r] = [at[x][mt[f][y]] for x, y in zip(m[r], m[c])]
    return tuple(x for row in m for x in row[d:])


def mat_det(a, ctx: FieldCtx, d: int) -> int:
    at, mt, nt, it = ctx.add_table, ctx.mul_table, ctx.neg_table, ctx.inv_table
    m = [list(a[i * d : (i + 1) * d]) for i in range(d)]
    det = 1
    for c in range(d):
        piv = next((r for r in range(c, d) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = nt[det]
        det = mt[det][m[c][c]]
        inv = it[m[c][c]]
        for r in range(c + 1, d):
            if m[r][c]:
                f = nt[mt[m[r][c]][inv]]
                m[r] = [at[x][mt[f][y]] for x, y in zip(m[r], m[c])]
    return det


def transpose(a, d: int) -> tuple[int, ...]:
    return tuple(a[j * d + i] for i in range(d) for j in range(d))


def entrywise(a, table) -> tuple[int, ...]:
    return tuple(table[x] for x in a)


def scalar(lam: int, d: int) -> tuple[int, ...]:
    return tuple(lam if i == j else 0 for i in range(d) for j in range(d))


def scale(a, lam: int, ctx: FieldCtx) -> tuple[int, ...]:
    mt = ctx.mul_table
    return tuple(mt[lam][x] for x in a)


def mat_vec(a, v, ctx: FieldCtx, d: int) -> tuple[int, ...]:
    at, mt = ctx.add_table, ctx.mul_table
    out = []
    for i in range(d):
        s = 0
        for t in range(d):
            s = at[s][mt[a[i * d + t]][v[t]]]
        out.append(s)
    return tuple(out)


def format_entry(code: int, ctx: FieldCtx) -> str:
    if ctx.k == 1:
        return str(code)
    return "[" + ",".join(str(c) for c in ctx.from_code(code).coeffs) + "]"


def format_matrix(a, ctx: FieldCtx, d: int) -> str:
    rows = rows_of(a, d)
    body = ",".join("[" + ",".join(format_entry(x, ctx) for x in r) + "]" for r in rows)
    return f"[{body}]@{ctx.label}"
