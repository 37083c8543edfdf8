"""Brute-force ground truth on finite rings.

Materialized operation tables plus exhaustive ideal enumeration and
per-element predicate scans.  Nothing here reuses the analytic
machinery of the spectrum module: the tables come from plain ring
arithmetic and every question is answered by enumeration, which is
what makes this usable as an oracle against the structural shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import Limits, default_limits
from .errors import BoundExceeded
from .groups import TableOfMarks


@dataclass
class FiniteRingTable:
    """Commutative ring with 1 on indices 0..n-1."""

    elements: list
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    zero: int
    one: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def __post_init__(self):
        n = self.size
        for i in range(n):
            if self.add[self.zero][i] != i or self.mul[self.one][i] != i:
                raise ValueError("zero/one do not act as identities")
            if self.add[i][self.neg[i]] != self.zero:
                raise ValueError("negation table is inconsistent")
            for j in range(i + 1, n):
                if self.add[i][j] != self.add[j][i] or self.mul[i][j] != self.mul[j][i]:
                    raise ValueError("tables are not commutative")


def table_for_model(model, limits: Optional[Limits] = None) -> FiniteRingTable:
    """Materialize the operation tables of a finite model."""
    limits = limits or default_limits()
    carrier = model.carrier()
    n = len(carrier)
    if n > limits.max_carrier:
        raise BoundExceeded(f"carrier size {n} exceeds the bound {limits.max_carrier}")
    index = {r: i for i, r in enumerate(carrier)}
    add = [[index[model.add(a, b)] for b in carrier] for a in carrier]
    mul = [[index[model.mul(a, b)] for b in carrier] for a in carrier]
    neg = [index[model.neg(a)] for a in carrier]
    return FiniteRingTable(
        elements=list(carrier),
        add=add,
        mul=mul,
        neg=neg,
        zero=index[model.zero()],
        one=index[model.one()],
    )


def modular_table(n: int) -> FiniteRingTable:
    """Z/n directly, without going through a ring model."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    elems = list(range(n))
    return FiniteRingTable(
        elements=elems,
        add=[[(a + b) % n for b in elems] for a in elems],
        mul=[[(a * b) % n for b in elems] for a in elems],
        neg=[(-a) % n for a in elems],
        zero=0,
        one=1,
    )


def product_table(t1: FiniteRingTable, t2: FiniteRingTable) -> FiniteRingTable:
    pairs = [(i, j) for i in range(t1.size) for j in range(t2.size)]
    index = {p: k for k, p in enumerate(pairs)}
    add = [
        [index[(t1.add[a1][b1], t2.add[a2][b2])] for (b1, b2) in pairs]
        for (a1, a2) in pairs
    ]
    mul = [
        [index[(t1.mul[a1][b1], t2.mul[a2][b2])] for (b1, b2) in pairs]
        for (a1, a2) in pairs
    ]
    neg = [index[(t1.neg[a1], t2.neg[a2])] for (a1, a2) in pairs]
    return FiniteRingTable(
        elements=[(t1.elements[i], t2.elements[j]) for i, j in pairs],
        add=add,
        mul=mul,
        neg=neg,
        zero=index[(t1.zero, t2.zero)],
        one=index[(t1.one, t2.one)],
    )


def burnside_mod_p_table(marks: TableOfMarks, p: int) -> FiniteRingTable:
    """The Burnside ring reduced mod p, built from integer structure
    constants of the basis classes."""
    from itertools import product as iproduct

    from .rings import BurnsideModel

    model = BurnsideModel(marks)
    k = model.k
    basis = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        basis.append(tuple(e))
    structure = [[model.mul(basis[i], basis[j]) for j in range(k)] for i in range(k)]

    vectors = [tuple(v) for v in iproduct(range(p), repeat=k)]
    index = {v: i for i, v in enumerate(vectors)}

    def vadd(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def vmul(a, b):
        out = [0] * k
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                coeffs = structure[i][j]
                for l, c in enumerate(coeffs):
                    out[l] = (out[l] + x * y * c) % p
        return tuple(out)

    one_vec = [0] * k
    one_vec[model.one().index(1)] = 1
    return FiniteRingTable(
        elements=vectors,
        add=[[index[vadd(a, b)] for b in vectors] for a in vectors],
        mul=[[index[vmul(a, b)] for b in vectors] for a in vectors],
        neg=[index[tuple((-x) % p for x in v)] for v in vectors],
        zero=index[(0,) * k],
        one=index[tuple(one_vec)],
    )


# -- ideal enumeration ------------------------------------------------------------


def ideal_closure(T: FiniteRingTable, seed) -> frozenset:
    """Smallest ideal containing the seed indices: close under addition,
    negation and multiplication by every ring element.

    Worklist closure: when an element is processed it is summed with
    everything already closed; for any pair the later-processed member
    sees the earlier one, so no sum is missed.
    """
    closed = {T.zero} | set(seed)
    frontier = list(closed)
    while frontier:
        nxt = []
        for x in frontier:
            candidates = [T.neg[x]]
            candidates.extend(T.mul[r][x] for r in range(T.size))
            candidates.extend(T.add[x][y] for y in closed)
            for c in candidates:
                if c not in closed:
                    closed.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(closed)


def all_ideals(T: FiniteRingTable, limits: Optional[Limits] = None) -> list[frozenset]:
    """Every ideal, found by saturation: extend each known ideal by one
    outside element and close, until no new ideals appear.

    Elements in the same coset of an ideal generate the same extension,
    so only one representative per coset is tried.
    """
    limits = limits or default_limits()
    if T.size > limits.max_oracle_spectrum:
        raise BoundExceeded(
            f"ideal enumeration bounded at {limits.max_oracle_spectrum} elements"
        )
    zero_ideal = frozenset({T.zero})
    known = {zero_ideal}
    frontier = [zero_ideal]
    while frontier:
        nxt = []
        for ideal in frontier:
            covered = set(ideal)
            for x in range(T.size):
                if x in covered:
                    continue
                covered.update(T.add[x][i] for i in ideal)
                bigger = ideal_closure(T, ideal | {x})
                if bigger not in known:
                    known.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def prime_ideals(T: FiniteRingTable, limits: Optional[Limits] = None) -> list[frozenset]:
    """Proper ideals whose quotient has no zero divisors."""
    primes = []
    for ideal in all_ideals(T, limits):
        if len(ideal) == T.size:
            continue
        outside = [x for x in range(T.size) if x not in ideal]
        if all(T.mul[x][y] not in ideal for x in outside for y in outside):
            primes.append(ideal)
    return primes


# -- exhaustive predicates ----------------------------------------------------------


@dataclass(frozen=True)
class OraclePredicates:
    nilpotent: bool
    unit: bool
    zero_divisor: bool
    idempotent: bool
    torsion: bool


def exhaustive_predicates(T: FiniteRingTable) -> list[OraclePredicates]:
    """Per-element scan; zero divisors include the zero element."""
    out = []
    nonzero = [s for s in range(T.size) if s != T.zero]
    for x in range(T.size):
        power = x
        seen = set()
        nilpotent = False
        while power not in seen:
            seen.add(power)
            if power == T.zero:
                nilpotent = True
                break
            power = T.mul[power][x]

        unit = any(T.mul[x][s] == T.one for s in range(T.size))
        zero_divisor = any(T.mul[x][s] == T.zero for s in nonzero)
        idempotent = T.mul[x][x] == x

        acc = x
        torsion = False
        for _ in range(T.size + 1):
            if acc == T.zero:
                torsion = True
                break
            acc = T.add[acc][x]
        out.append(
            OraclePredicates(
                nilpotent=nilpotent,
                unit=unit,
                zero_divisor=zero_divisor,
                idempotent=idempotent,
                torsion=torsion,
            )
        )
    return out
