"""Structural queries on enumerated groups.

All queries run on element indices of an enumerated group.  Conjugation by
every element at once (``Group.conjugates_by_all``) makes centralizers and
normalizers a single vectorised pass; Sylow subgroups grow inside
normalizers; p-cores, centers and Fitting subgroups come from the class
partition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from sympy import factorint, primefactors

from .group import Group, Subgroup
from .products import quotient_group


class NotAPGroup(ValueError):
    pass


class NotSolvable(ValueError):
    pass


@dataclass
class ConjClasses:
    representatives: list
    rep_indices: np.ndarray
    membership: np.ndarray  # element index -> class number
    sizes: np.ndarray
    orders: np.ndarray  # element order of each class

    def __len__(self):
        return len(self.representatives)


def conjugacy_classes(G: Group) -> ConjClasses:
    cl = G.classes()
    e = G.elements
    return ConjClasses([e[i] for i in cl.reps], cl.reps, cl.labels, cl.sizes, cl.rep_orders)


def class_of(G: Group, x) -> np.ndarray:
    cl = G.classes()
    return np.nonzero(cl.labels == cl.labels[G.index_of(x)])[0]


def centralizer(G: Group, x) -> Subgroup:
    i = G.index_of(x)
    return Subgroup(G, G.conjugates_by_all(i) == i)


def cyclic_mask(G: Group, x) -> np.ndarray:
    """Mask of <x>."""
    m = np.zeros(G.order, dtype=bool)
    y = x
    m[0] = True
    while y != G.identity:
        m[G.index_of(y)] = True
        y = G.mul(y, x)
    return m


def normalizer_cyclic(G: Group, x) -> Subgroup:
    """{g : g x g^-1 in <x>}."""
    cyc = cyclic_mask(G, x)
    return Subgroup(G, cyc[G.conjugates_by_all(G.index_of(x))])


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    gens = H.gens
    mask = np.ones(G.order, dtype=bool)
    if gens:
        conj = G.conjugates_by_all(np.array(gens))
        mask = H.mask[conj].all(axis=1)
    return Subgroup(G, mask)


def center(G: Group) -> Subgroup:
    cl = G.classes()
    return Subgroup(G, cl.sizes[cl.labels] == 1)


def is_abelian(G: Group) -> bool:
    gens = G.generators
    return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)


def exponent(G: Group) -> int:
    return int(np.lcm.reduce(G.classes().rep_orders)) if G.order > 1 else 1


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def p_element_mask(G: Group, primes) -> np.ndarray:
    """Elements whose order has all prime divisors in ``primes``."""
    orders = G.orders()
    uniq = np.unique(orders)
    good = {int(o) for o in uniq if set(primefactors(int(o))) <= set(primes)}
    return np.isin(orders, list(good))


def normal_closure(G: Group, elements) -> Subgroup:
    """Smallest normal subgroup containing the elements (union of their classes)."""
    cl = G.classes()
    labels = {int(cl.labels[G.index_of(x)]) for x in elements}
    seed = np.isin(cl.labels, list(labels))
    return generated_by_mask(G, seed)


def generated_by_mask(G: Group, seed: np.ndarray) -> Subgroup:
    """Subgroup generated by a set of elements given as a mask."""
    gens: list[int] = []
    cur = np.zeros(G.order, dtype=bool)
    cur[0] = True
    orders = G.orders()
    while True:
        rest = np.nonzero(seed & ~cur)[0]
        if rest.size == 0:
            break
        gens.append(int(rest[np.argmax(orders[rest])]))
        cur = G.closure_mask(gens)
    return Subgroup(G, cur, gens)


def derived_subgroup(G: Group) -> Subgroup:
    gens = G.generators
    comms = [G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    return normal_closure(G, comms or [G.identity])


def derived_series(G: Group) -> list[int]:
    """Orders along G >= G' >= G'' >= ... until it stabilises."""
    orders = [G.order]
    H = G
    while True:
        D = derived_subgroup(H)
        if D.order == H.order:
            return orders
        orders.append(D.order)
        if D.order == 1:
            return orders
        H = D.as_group()


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1] == 1


def derived_length(G: Group) -> int:
    s = derived_series(G)
    if s[-1] != 1:
        raise NotSolvable(f"{G.spec} is not solvable")
    return len(s) - 1


def sylow(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup grown inside successive normalizers."""
    target = p_part(G.order, p)
    if target == 1:
        return G.trivial()
    pel = p_element_mask(G, [p]) & (np.arange(G.order) != 0)
    orders = G.orders()
    cand = np.nonzero(pel)[0]
    start = int(cand[np.argmax(orders[cand])])
    P = Subgroup(G, G.closure_mask([start]), [start])
    while P.order < target:
        N = normalizer(G, P)
        choice = np.nonzero(N.mask & ~P.mask & pel)[0]
        if choice.size == 0:
            raise AssertionError("normalizer growth stalled below the Sylow order")
        gens = P.gens + [int(choice[0])]
        P = Subgroup(G, G.closure_mask(gens), gens)
    return P


def p_core(G: Group, p: int) -> Subgroup:
    """O_p(G): the elements whose whole conjugacy class lies in a Sylow p-subgroup."""
    P = sylow(G, p)
    cl = G.classes()
    outside = np.bincount(cl.labels, weights=~P.mask, minlength=len(cl.reps))
    mask = (outside == 0)[cl.labels]
    return Subgroup(G, mask)


def is_nilpotent(G: Group) -> bool:
    return all(p_core(G, p).order == p_part(G.order, p) for p in primefactors(G.order))


def fitting_subgroup(G: Group) -> Subgroup:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for p in primefactors(G.order):
        mask |= p_core(G, p).mask
    return generated_by_mask(G, mask)


def fitting_length(G: Group) -> int:
    if not is_solvable(G):
        raise NotSolvable(f"{G.spec} is not solvable")
    length = 0
    H = G
    while H.order > 1:
        F = fitting_subgroup(H)
        length += 1
        if F.order == H.order:
            break
        H = quotient_group(H, F)
    return length


def _require_p_group(P: Group) -> int:
    fac = factorint(P.order)
    if len(fac) > 1:
        raise NotAPGroup(f"{P.spec} has order {P.order}, not a prime power")
    return next(iter(fac), 2)


def frattini_pgroup(P: Group) -> Subgroup:
    """Phi(P) = P' P^p for a p-group P."""
    p = _require_p_group(P)
    e = P.elements
    seeds = [P.power(x, p) for x in e]
    mask = derived_subgroup(P).mask.copy()
    for y in seeds:
        mask[P.index_of(y)] = True
    return generated_by_mask(P, mask)


def min_generators(P: Group) -> int:
    p = _require_p_group(P)
    index = P.order // frattini_pgroup(P).order
    return round(math.log(index, p)) if index > 1 else 0


def omega1(P: Group) -> Subgroup:
    """Subgroup generated by the elements of order p (the involutions for p = 2)."""
    p = _require_p_group(P)
    return generated_by_mask(P, P.orders() == p)


def involution_subgroup(G: Group) -> Subgroup:
    return generated_by_mask(G, G.orders() == 2)


def is_elementary_abelian(G: Group) -> bool:
    if G.order == 1:
        return True
    fac = factorint(G.order)
    return len(fac) == 1 and is_abelian(G) and exponent(G) == next(iter(fac))


def involution_class_count(G: Group) -> int:
    cl = G.classes()
    return int(np.sum(cl.rep_orders == 2))


@dataclass
class FrobeniusCheck:
    is_frobenius: bool
    kernel: Subgroup | None
    reason: str = ""


def is_frobenius_with_complement(G: Group, K: Subgroup) -> FrobeniusCheck:
    """K is a Frobenius complement iff N_G(K) = K and its conjugates meet trivially."""
    if not 1 < K.order < G.order:
        raise ValueError("complement must be a proper nontrivial subgroup")
    if normalizer(G, K).order != K.order:
        return FrobeniusCheck(False, None, "K is not self-normalising")
    cl = G.classes()
    kidx = K.indices[K.indices != 0]
    union = np.isin(cl.labels, np.unique(cl.labels[kidx]))
    expected = (G.order // K.order) * (K.order - 1)
    if int(union.sum()) != expected:
        return FrobeniusCheck(False, None, "conjugates of K intersect nontrivially")
    kernel_mask = ~union
    closure = generated_by_mask(G, kernel_mask)
    if closure.order != G.order // K.order or not np.array_equal(closure.mask, kernel_mask):
        return FrobeniusCheck(False, None, "kernel set is not a subgroup")
    return FrobeniusCheck(True, closure)


def is_real(G: Group, x) -> bool:
    cl = G.classes()
    return bool(cl.labels[G.index_of(x)] == cl.labels[G.index_of(G.inv(x))])


def is_p_group(G: Group) -> bool:
    return len(factorint(G.order)) <= 1
