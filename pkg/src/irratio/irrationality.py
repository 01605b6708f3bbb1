"""Deciding (pi-)irrationality through power orbits of class representatives.

For an element x of order n the *power orbit* is the set B of units k mod n
with x^k conjugate to x.  It is a subgroup of (Z/n)^*, isomorphic to
N_G(<x>)/C_G(x), and phi(n)/|B| is the degree of the field of character
values at x.  G is pi-irrational exactly when B = {1} for every pi-element.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from sympy import primefactors, totient

from .group import Group
from . import structure


@dataclass(frozen=True)
class PowerOrbit:
    element: object
    order: int
    units: tuple[int, ...]

    @property
    def field_degree(self) -> int:
        return int(totient(self.order)) // len(self.units)

    @property
    def trivial(self) -> bool:
        return self.units == (1,) or self.order <= 2


@dataclass(frozen=True)
class Witness:
    """g x g^-1 = x^k with k != 1 mod order(x)."""

    x: object
    k: int
    g: object

    def holds(self, G: Group) -> bool:
        n = G.element_order(self.x)
        return (
            self.k % n != 1 % n
            and math.gcd(self.k, n) == 1
            and G.conjugate(self.g, self.x) == G.power(self.x, self.k)
        )


@dataclass
class Verdict:
    holds: bool
    witness: Witness | None = None
    primes: tuple[int, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.holds


def _powers(G: Group, x) -> list[int]:
    cl = G.classes()
    i = G.index_of(x)
    c = cl.labels[i]
    if cl.reps[c] == i:
        return cl.rep_powers[c]
    seq, y = [0], x
    while y != G.identity:
        seq.append(G.index_of(y))
        y = G.mul(y, x)
    return seq


def power_orbit(G: Group, x) -> PowerOrbit:
    cl = G.classes()
    pw = _powers(G, x)
    n = len(pw)
    lab = cl.labels[pw[1 % n]]
    units = tuple(k for k in range(1, max(n, 2)) if math.gcd(k, n) == 1 and cl.labels[pw[k % n]] == lab)
    if n == 1:
        units = (1,)
    uset = set(units)
    if any((a * b) % n not in uset for a in units for b in units if n > 1):
        raise AssertionError("power orbit is not a subgroup of the unit group")
    return PowerOrbit(x, n, units)


def find_conjugator(G: Group, x, y):
    """Some g with g x g^-1 = y, or None."""
    conj = G.conjugates_by_all(G.index_of(x))
    hits = np.nonzero(conj == G.index_of(y))[0]
    return G.elements[int(hits[0])] if hits.size else None


def _witness(G: Group, x, orbit: PowerOrbit) -> Witness:
    k = next(u for u in orbit.units if u != 1)
    g = find_conjugator(G, x, G.power(x, k))
    return Witness(x, k, g)


def is_pi_irrational(G: Group, primes) -> Verdict:
    """N_G(<x>) = C_G(x) for every pi-element x, decided per class."""
    primes = tuple(sorted(set(int(p) for p in primes)))
    cl = G.classes()
    e = G.elements
    pset = set(primes)
    for c, r in enumerate(cl.reps):
        n = int(cl.rep_orders[c])
        if n <= 2 or not set(primefactors(n)) <= pset:
            continue
        orbit = power_orbit(G, e[r])
        if not orbit.trivial:
            return Verdict(False, _witness(G, e[r], orbit), primes)
    return Verdict(True, None, primes)


def is_p_irrational(G: Group, p: int) -> Verdict:
    return is_pi_irrational(G, [p])


def is_irrational(G: Group) -> Verdict:
    return is_pi_irrational(G, primefactors(G.order))


def odd_primes(G: Group) -> list[int]:
    """The prime set 2' restricted to the primes dividing |G|."""
    return [p for p in primefactors(G.order) if p != 2]


def is_2prime_irrational(G: Group) -> Verdict:
    return is_pi_irrational(G, odd_primes(G))


def crosscheck_nc(G: Group, x) -> bool:
    """C_G(x) = N_G(<x>) by a direct scan over all conjugates of x."""
    return structure.centralizer(G, x).order == structure.normalizer_cyclic(G, x).order


def crosscheck_all(G: Group, chunk: int = 64) -> tuple[int, int]:
    """Compare the power-orbit verdict with the direct N = C scan on every class.

    Returns (number of agreeing representatives, number of representatives).
    Membership of conjugates in <x_j> is tested for 64 representatives at a
    time through one bitmask per element.
    """
    cl = G.classes()
    e = G.elements
    agree = 0
    reps = np.asarray(cl.reps)
    bits = np.uint64(1) << np.arange(64, dtype=np.uint64)
    for start in range(0, len(reps), 64):
        block = reps[start : start + 64]
        conj = G.conjugates_by_all(block)
        owner = np.zeros(G.order, dtype=np.uint64)
        for j, r in enumerate(block):
            owner[_powers(G, e[r])] |= bits[j]
        in_cyclic = (owner[conj] & bits[: len(block)]) != 0
        n_sizes = in_cyclic.sum(axis=0)
        c_sizes = (conj == block[None, :]).sum(axis=0)
        for j, r in enumerate(block):
            orbit_trivial = power_orbit(G, e[r]).units == (1,)
            agree += bool(n_sizes[j] == c_sizes[j]) == orbit_trivial
    return agree, len(reps)


@dataclass
class ReportRow:
    representative: str
    order: int
    class_size: int
    units: tuple[int, ...]
    field_degree: int
    real: bool

    def as_dict(self) -> dict:
        return {
            "rep": self.representative,
            "order": self.order,
            "class_size": self.class_size,
            "B": list(self.units),
            "field_degree": self.field_degree,
            "real": self.real,
        }


def irrationality_report(G: Group) -> dict:
    cl = G.classes()
    e = G.elements
    rows = []
    for c, r in enumerate(cl.reps):
        x = e[r]
        orbit = power_orbit(G, x)
        rows.append(
            ReportRow(
                G.fmt(x),
                orbit.order,
                int(cl.sizes[c]),
                orbit.units,
                orbit.field_degree,
                structure.is_real(G, x),
            )
        )
    per_prime = {p: bool(is_p_irrational(G, p)) for p in primefactors(G.order)}
    return {"rows": rows, "per_prime": per_prime, "irrational": all(per_prime.values())}
