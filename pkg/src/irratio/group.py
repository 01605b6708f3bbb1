"""Finite groups as generator lists over a multiplication rule.

A :class:`Group` subclass supplies ``identity``, ``mul``, ``inv`` and ``fmt``
on plain hashable values (tuples of ints, possibly nested).  Once enumerated,
the group owns an indexed copy of its elements together with the
left-multiplication tables of its generators and the breadth-first tree that
reached every element.  Those two pieces turn most questions (all conjugates
of x, all products y*x, cosets, classes) into vectorised table lookups.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

DEFAULT_BUDGET = 500_000


def default_budget() -> int:
    return int(os.environ.get("IRRATIO_MAX_ORDER", DEFAULT_BUDGET))


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the element budget."""


class InvalidAction(ValueError):
    pass


class NotNormal(ValueError):
    pass


@dataclass
class _Enumeration:
    elements: list
    index: dict
    left: np.ndarray  # (ngens, N): left[t, i] = index(gen_t * x_i)
    layers: list  # [(children, parents, gens)] by BFS depth


@dataclass
class _Classes:
    labels: np.ndarray  # element index -> class number
    reps: np.ndarray  # class number -> representative index (least index)
    sizes: np.ndarray
    rep_powers: list  # class number -> indices of x^0, x^1, ..., x^(n-1)

    @property
    def rep_orders(self) -> np.ndarray:
        return np.array([len(p) for p in self.rep_powers], dtype=np.int64)


class Group:
    """Abstract finite group; subclasses define the element law."""

    identity = None

    def __init__(self, generators, spec: str = ""):
        gens = list(generators)
        self.generators = gens if gens else [self.identity]
        self.spec = spec
        self._enum: _Enumeration | None = None
        self._classes: _Classes | None = None
        self._rtables: dict[int, np.ndarray] = {}
        self._cache: dict = {}

    # -- element law ---------------------------------------------------------
    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return repr(a)

    def power(self, x, k: int):
        if k < 0:
            x, k = self.inv(x), -k
        result, base = self.identity, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, x) -> int:
        """Least n >= 1 with x^n = 1.

        Uses the enumerated class data when available, otherwise iterates.
        """
        if self._enum is not None:
            return int(self.orders()[self.index_of(x)])
        n, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
        return n

    def commutator(self, a, b):
        """[a, b] = a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def conjugate(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def __repr__(self):
        return f"<{type(self).__name__} {self.spec or '?'}>"

    # -- enumeration ---------------------------------------------------------
    def enumerate(self, max_order: int | None = None) -> list:
        """Breadth-first closure of the generators under left multiplication."""
        if self._enum is not None:
            return self._enum.elements
        budget = default_budget() if max_order is None else max_order
        gens = self.generators
        mul = self.mul
        elements = [self.identity]
        index = {self.identity: 0}
        left = [[] for _ in gens]
        parent = [-1]
        via = [-1]
        depth = [0]
        i = 0
        while i < len(elements):
            x = elements[i]
            for t, g in enumerate(gens):
                y = mul(g, x)
                j = index.get(y)
                if j is None:
                    j = len(elements)
                    if j >= budget:
                        raise BudgetExceeded(
                            f"{self.spec or self!r}: more than {budget} elements"
                        )
                    index[y] = j
                    elements.append(y)
                    parent.append(i)
                    via.append(t)
                    depth.append(depth[i] + 1)
                left[t].append(j)
            i += 1
        left_arr = np.array(left, dtype=np.int32).reshape(len(gens), len(elements))
        parent_a = np.array(parent, dtype=np.int32)
        via_a = np.array(via, dtype=np.int32)
        depth_a = np.array(depth, dtype=np.int32)
        layers = []
        for d in range(1, int(depth_a.max()) + 1 if len(depth) > 1 else 1):
            ch = np.nonzero(depth_a == d)[0].astype(np.int32)
            layers.append((ch, parent_a[ch], via_a[ch]))
        self._enum = _Enumeration(elements, index, left_arr, layers)
        return elements

    @property
    def elements(self) -> list:
        return self.enumerate()

    @property
    def order(self) -> int:
        return len(self.enumerate())

    def __len__(self):
        return self.order

    def index_of(self, x) -> int:
        self.enumerate()
        try:
            return self._enum.index[x]
        except KeyError:
            raise ValueError(f"{self.fmt(x)} is not an element of {self.spec}") from None

    def __contains__(self, x) -> bool:
        self.enumerate()
        return x in self._enum.index

    def is_identity_group(self) -> bool:
        return self.order == 1

    # -- index machinery -----------------------------------------------------
    def _propagate(self, table: np.ndarray, init) -> np.ndarray:
        """f(1) = init, f(gen_t * y) = table[t, f(y)], along the BFS tree."""
        self.enumerate()
        n = self.order
        init = np.asarray(init, dtype=np.int32)
        f = np.empty((n,) + init.shape, dtype=np.int32)
        f[0] = init
        if init.ndim == 0:
            for ch, pa, ge in self._enum.layers:
                f[ch] = table[ge, f[pa]]
        else:
            for ch, pa, ge in self._enum.layers:
                f[ch] = table[ge[:, None], f[pa]]
        return f

    def right_table(self, i: int) -> np.ndarray:
        """Array r with r[j] = index(x_j * x_i)."""
        r = self._rtables.get(i)
        if r is None:
            r = self._propagate(self._enum_left(), i)
            if len(self._rtables) > 256:
                self._rtables.clear()
            self._rtables[i] = r
        return r

    def _enum_left(self) -> np.ndarray:
        self.enumerate()
        return self._enum.left

    def _gen_indices(self) -> list[int]:
        return [self.index_of(g) for g in self.generators]

    def inverse_table(self) -> np.ndarray:
        if "inv" not in self._cache:
            rinv = np.stack([self.right_table(self.index_of(self.inv(g))) for g in self.generators])
            self._cache["inv"] = self._propagate(rinv, 0)
        return self._cache["inv"]

    def conj_tables(self) -> np.ndarray:
        """conj[t, i] = index(gen_t * x_i * gen_t^-1)."""
        if "conj" not in self._cache:
            left = self._enum_left()
            rows = []
            for t, g in enumerate(self.generators):
                rinv = self.right_table(self.index_of(self.inv(g)))
                rows.append(left[t][rinv])
            self._cache["conj"] = np.stack(rows)
        return self._cache["conj"]

    def conjugates_by_all(self, i) -> np.ndarray:
        """c[j] = index(x_j * x_i * x_j^-1) for every j; batched when i is an array."""
        return self._propagate(self.conj_tables(), i)

    def mul_idx(self, i: int, j: int) -> int:
        e = self.elements
        return self._enum.index[self.mul(e[i], e[j])]

    # -- conjugacy classes ---------------------------------------------------
    def classes(self) -> _Classes:
        if self._classes is None:
            n = self.order
            conj = self.conj_tables()
            src = np.tile(np.arange(n, dtype=np.int32), conj.shape[0])
            graph = coo_matrix(
                (np.ones(src.size, dtype=np.int8), (src, conj.reshape(-1))), shape=(n, n)
            ).tocsr()
            _, raw = connected_components(graph, directed=True, connection="weak")
            rep_of = np.full(raw.max() + 1, n, dtype=np.int64)
            np.minimum.at(rep_of, raw, np.arange(n))
            order = np.argsort(rep_of)
            relabel = np.empty_like(order)
            relabel[order] = np.arange(order.size)
            labels = relabel[raw]
            reps = rep_of[order]
            sizes = np.bincount(labels, minlength=reps.size)
            e = self.elements
            idx = self._enum.index
            powers = []
            for r in reps:
                x = e[r]
                seq, y = [0], x
                while y != self.identity:
                    seq.append(idx[y])
                    y = self.mul(y, x)
                powers.append(seq)
            self._classes = _Classes(labels, reps, sizes, powers)
        return self._classes

    def orders(self) -> np.ndarray:
        """Element orders for every index (a class function)."""
        if "orders" not in self._cache:
            cl = self.classes()
            self._cache["orders"] = cl.rep_orders[cl.labels]
        return self._cache["orders"]

    # -- subgroups -----------------------------------------------------------
    def closure_mask(self, gen_idx) -> np.ndarray:
        n = self.order
        mask = np.zeros(n, dtype=bool)
        mask[0] = True
        tables = [self.right_table(int(i)) for i in set(int(i) for i in gen_idx) if i != 0]
        frontier = np.array([0], dtype=np.int32)
        while frontier.size and tables:
            nxt = np.unique(np.concatenate([t[frontier] for t in tables]))
            nxt = nxt[~mask[nxt]]
            mask[nxt] = True
            frontier = nxt
        return mask

    def subgroup(self, elements) -> "Subgroup":
        """Subgroup generated by the given elements."""
        idx = [self.index_of(x) for x in elements]
        return Subgroup(self, self.closure_mask(idx), idx)

    def whole(self) -> "Subgroup":
        return Subgroup(self, np.ones(self.order, dtype=bool), self._gen_indices())

    def trivial(self) -> "Subgroup":
        m = np.zeros(self.order, dtype=bool)
        m[0] = True
        return Subgroup(self, m, [])


class Subgroup:
    """Subset of an enumerated parent closed under the group law.

    ``gens`` is a list of parent indices generating exactly ``mask``; when
    built from a bare mask the certificate is derived greedily on demand.
    """

    def __init__(self, parent: Group, mask: np.ndarray, gens=None):
        self.parent = parent
        self.mask = mask
        self._gens = None if gens is None else [int(g) for g in gens]
        self._group = None

    @property
    def order(self) -> int:
        return int(self.mask.sum())

    def __len__(self):
        return self.order

    @property
    def indices(self) -> np.ndarray:
        return np.nonzero(self.mask)[0]

    @property
    def elements(self) -> list:
        e = self.parent.elements
        return [e[i] for i in self.indices]

    def __contains__(self, x) -> bool:
        return x in self.parent and bool(self.mask[self.parent.index_of(x)])

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and bool(np.array_equal(self.mask, other.mask))
        )

    def __le__(self, other: "Subgroup") -> bool:
        return not np.any(self.mask & ~other.mask)

    @property
    def gens(self) -> list[int]:
        if self._gens is None:
            gens: list[int] = []
            cur = np.zeros_like(self.mask)
            cur[0] = True
            while True:
                rest = np.nonzero(self.mask & ~cur)[0]
                if rest.size == 0:
                    break
                # largest-order candidates first keeps certificates short
                orders = self.parent.orders()[rest]
                gens.append(int(rest[np.argmax(orders)]))
                cur = self.parent.closure_mask(gens)
            self._gens = gens
        return self._gens

    @property
    def generators(self) -> list:
        e = self.parent.elements
        return [e[i] for i in self.gens]

    def as_group(self) -> "GeneratedGroup":
        """This subgroup as a standalone group with the same element law."""
        if self._group is None:
            g = GeneratedGroup(self.parent, self.generators, f"sub({self.parent.spec},{self.order})")
            g.enumerate()
            self._group = g
        return self._group

    def is_normal(self) -> bool:
        conj = self.parent.conj_tables()
        idx = self.indices
        return bool(all(self.mask[row[idx]].all() for row in conj))

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent.spec}>"


class GeneratedGroup(Group):
    """Group generated by elements of an ambient group, using its law."""

    def __init__(self, ambient: Group, generators, spec: str = ""):
        self.ambient = ambient
        self.identity = ambient.identity
        super().__init__(generators, spec)

    def mul(self, a, b):
        return self.ambient.mul(a, b)

    def inv(self, a):
        return self.ambient.inv(a)

    def fmt(self, a):
        return self.ambient.fmt(a)


# -- concrete element laws ---------------------------------------------------


def perm_mul(a, b):
    """Composition a after b: (a*b)(i) = a(b(i))."""
    return tuple(map(a.__getitem__, b))


def perm_inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def format_perm(a) -> str:
    seen = set()
    cycles = []
    for i in range(len(a)):
        if i in seen or a[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = a[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def parse_perm(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse disjoint-cycle notation, 1-based, e.g. ``(1 2 3)(4 5)``."""
    text = text.strip()
    cycles = []
    for chunk in text.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad cycle {chunk!r}")
        body = chunk[1:-1].replace(",", " ").split()
        cycles.append([int(x) - 1 for x in body])
    n = max([max(c) + 1 for c in cycles if c] + [degree or 0, 1])
    img = list(range(n))
    seen = set()
    for c in cycles:
        for x in c:
            if x < 0 or x in seen:
                raise ValueError(f"cycles in {text!r} are not disjoint or not positive")
            seen.add(x)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


class PermGroup(Group):
    kind = "perm"

    def __init__(self, degree: int, generators, spec: str = ""):
        self.degree = degree
        self.identity = tuple(range(degree))
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
        super().__init__(gens, spec)

    def mul(self, a, b):
        return tuple(map(a.__getitem__, b))

    def inv(self, a):
        return perm_inv(a)

    def fmt(self, a):
        return format_perm(a)


class VectorGroup(Group):
    """Additive group Z_{n_1} x ... x Z_{n_k} on int tuples."""

    kind = "vector"

    def __init__(self, moduli, generators=None, spec: str = ""):
        self.moduli = tuple(moduli)
        self.identity = (0,) * len(self.moduli)
        if generators is None:
            generators = [
                tuple(1 if i == j else 0 for i in range(len(self.moduli)))
                for j, m in enumerate(self.moduli)
                if m > 1
            ]
        super().__init__(generators, spec)

    def mul(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inv(self, a):
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def fmt(self, a):
        return "[" + ",".join(map(str, a)) + "]"


class MatrixGroup(Group):
    """Invertible d x d matrices over GF(q); optionally modulo scalars.

    With ``scalars`` given (field codes lambda with lambda*I central), every
    element is stored as the least of {lambda * m} under tuple order.
    """

    kind = "matrix"

    def __init__(self, ctx, d: int, generators, scalars=None, spec: str = ""):
        from . import matrices

        self.ctx = ctx
        self.d = d
        self.scalars = tuple(sorted(set(scalars))) if scalars else (1,)
        self.projective = len(self.scalars) > 1
        self._mul = matrices.make_mul(ctx, d)
        self.identity = matrices.identity(d)
        gens = [self.canonical(matrices.from_rows(g, ctx) if isinstance(g[0], (list, tuple)) else tuple(g)) for g in generators]
        for g in gens:
            if matrices.mat_det(g, ctx, d) == 0:
                raise ValueError("singular generator")
        super().__init__(gens, spec)

    def canonical(self, m):
        if not self.projective:
            return m
        mt = self.ctx.mul_table
        return min(tuple(mt[lam][x] for x in m) for lam in self.scalars)

    def mul(self, a, b):
        return self.canonical(self._mul(a, b))

    def inv(self, a):
        from .matrices import mat_inv

        return self.canonical(mat_inv(a, self.ctx, self.d))

    def fmt(self, a):
        from .matrices import format_matrix

        return format_matrix(a, self.ctx, self.d)


def canonical_projective(m, scalars, ctx) -> tuple[int, ...]:
    """Least encoding among {lambda * m : lambda in scalars} under row-major order."""
    mt = ctx.mul_table
    return min(tuple(mt[lam][x] for x in m) for lam in set(scalars) | {1})


class LawGroup(Group):
    """Group on tuples with an explicitly supplied product and inverse."""

    kind = "tuple"

    def __init__(self, identity, mul, inv, generators, spec: str = "", fmt=None):
        self.identity = identity
        self._mulf = mul
        self._invf = inv
        self._fmtf = fmt
        super().__init__(generators, spec)

    def mul(self, a, b):
        return self._mulf(a, b)

    def inv(self, a):
        return self._invf(a)

    def fmt(self, a):
        if self._fmtf is not None:
            return self._fmtf(a)
        return "(" + ",".join(map(str, a)) + ")"
