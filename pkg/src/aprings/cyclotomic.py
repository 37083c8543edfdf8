"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

An element is a coordinate vector over the power basis
1, zeta, ..., zeta^(d-1) of Z[X]/(Phi_m), d = deg Phi_m.  Values of
different orders compare equal when they agree after lifting to a
common order; the rational integers are exactly the values whose
non-constant coordinates vanish.

Hashing uses the normalized trace Tr(x)/phi(m), which is invariant
under order lifting, so equal values hash equal across orders (and a
rational value hashes like the corresponding Fraction, hence like the
corresponding int).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .config import default_limits
from .errors import NonIntegerCoefficient, UnsupportedOrder
from .intpoly import IntPolynomial


# -- elementary number theory ------------------------------------------------


def divisors(n: int) -> list[int]:
    ds = [d for d in range(1, n + 1) if n % d == 0]
    return ds


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs a positive argument")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs a positive argument")
    m, count = n, 0
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
        p += 1
    if m > 1:
        count += 1
    return -1 if count % 2 else 1


# -- cyclotomic polynomials ----------------------------------------------------


def cyclotomic_polynomial(m: int, max_degree: Optional[int] = None) -> IntPolynomial:
    """The m-th cyclotomic polynomial Phi_m, computed by exact division
    of X^m - 1 by the product of Phi_d over proper divisors d of m."""
    if m < 1:
        raise ValueError("order must be positive")
    cap = max_degree if max_degree is not None else default_limits().max_cyclotomic_degree
    if euler_phi(m) > cap:
        raise UnsupportedOrder(f"deg Phi_{m} = {euler_phi(m)} exceeds the cap {cap}")
    return _cyclotomic(m)


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> IntPolynomial:
    num = IntPolynomial.monomial(m) - 1
    for d in divisors(m)[:-1]:
        q, r = divmod(num, _cyclotomic(d))
        assert r.is_zero
        num = q
    return num


@lru_cache(maxsize=None)
def _reduction_state(m: int) -> tuple[int, tuple[int, ...]]:
    phi = _cyclotomic(m)
    # X^d = -(low part of Phi_m) since Phi_m is monic
    return phi.degree, phi.coeffs[:-1]


def _reduce(m: int, vec: Sequence[int]) -> tuple[int, ...]:
    d, low = _reduction_state(m)
    v = list(vec)
    for i in range(len(v) - 1, d - 1, -1):
        c = v[i]
        if c:
            v[i] = 0
            base = i - d
            for j, a in enumerate(low):
                v[base + j] -= c * a
    if len(v) < d:
        v.extend([0] * (d - len(v)))
    return tuple(v[:d])


@lru_cache(maxsize=None)
def _trace_table(m: int) -> tuple[int, ...]:
    # Tr(zeta_m^j) over Q: zeta_m^j is a primitive e-th root, e = m/gcd(j, m),
    # with trace mu(e) * phi(m) / phi(e).
    d, _ = _reduction_state(m)
    traces = []
    for j in range(d):
        e = m // gcd(j, m)
        traces.append(moebius(e) * euler_phi(m) // euler_phi(e))
    return tuple(traces)


# -- elements ------------------------------------------------------------------


class CyclotomicInteger:
    __slots__ = ("order", "coords", "_hash")

    def __init__(self, order: int, coords: Sequence[int]):
        if order < 1:
            raise ValueError("order must be positive")
        d, _ = _reduction_state(order)
        coords = tuple(int(c) for c in coords)
        if len(coords) != d:
            coords = _reduce(order, coords)
        self.order = order
        self.coords = coords
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int, order: int = 1) -> "CyclotomicInteger":
        d, _ = _reduction_state(order)
        return CyclotomicInteger(order, (int(n),) + (0,) * (d - 1))

    @staticmethod
    def zeta(m: int, j: int = 1) -> "CyclotomicInteger":
        j %= m
        return CyclotomicInteger(m, (0,) * j + (1,))

    # -- queries ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_int(self) -> Optional[int]:
        """The integer value, or None when the element is irrational."""
        if self.is_rational:
            return self.coords[0]
        return None

    # -- order handling -----------------------------------------------

    def lift(self, target: int) -> "CyclotomicInteger":
        if target == self.order:
            return self
        if target % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {target}")
        step = target // self.order
        vec = [0] * ((len(self.coords) - 1) * step + 1)
        for j, c in enumerate(self.coords):
            vec[j * step] = c
        return CyclotomicInteger(target, _reduce(target, vec))

    def _common(self, other: "CyclotomicInteger"):
        if self.order == other.order:
            return self, other
        target = lcm(self.order, other.order)
        cyclotomic_polynomial(target)  # enforce the degree cap
        return self.lift(target), other.lift(target)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "CyclotomicInteger":
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicInteger(a.order, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __sub__(self, other) -> "CyclotomicInteger":
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CyclotomicInteger":
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.order, tuple(-c for c in self.coords))

    def __mul__(self, other) -> "CyclotomicInteger":
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        out = [0] * (len(a.coords) + len(b.coords) - 1)
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j, y in enumerate(b.coords):
                out[i + j] += x * y
        return CyclotomicInteger(a.order, _reduce(a.order, out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicInteger":
        if n < 0:
            raise ValueError("negative exponent")
        result = CyclotomicInteger.from_int(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- identity -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_rational and self.coords[0] == other
        if isinstance(other, CyclotomicInteger):
            if self.order == other.order:
                return self.coords == other.coords
            a, b = self._common(other)
            return a.coords == b.coords
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            traces = _trace_table(self.order)
            tr = sum(c * t for c, t in zip(self.coords, traces))
            self._hash = hash(Fraction(tr, euler_phi(self.order)))
        return self._hash

    def sort_key(self) -> tuple:
        return (self.order, self.coords)

    def __repr__(self) -> str:
        return f"CyclotomicInteger({self})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coords[0])
        parts = []
        for j, c in enumerate(self.coords):
            if c == 0:
                continue
            if j == 0:
                body = str(abs(c))
            else:
                gen = "i" if self.order == 4 else f"z{self.order}"
                power = gen if j == 1 else f"{gen}^{j}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(parts)

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coords": [str(c) for c in self.coords]}

    @staticmethod
    def from_json(data: dict) -> "CyclotomicInteger":
        return CyclotomicInteger(int(data["order"]), [int(c) for c in data["coords"]])


def _coerce(value, order: int):
    if isinstance(value, CyclotomicInteger):
        return value
    if isinstance(value, int):
        return CyclotomicInteger.from_int(value, order)
    return NotImplemented


# -- public operations -----------------------------------------------------------


def root_of_unity(m: int, j: int = 1, max_degree: Optional[int] = None) -> CyclotomicInteger:
    """zeta_m^j in canonical form; satisfies root_of_unity(m, j)**m == 1."""
    cyclotomic_polynomial(m, max_degree=max_degree)
    return CyclotomicInteger.zeta(m, j)


def as_rational_integer(value: CyclotomicInteger) -> Optional[int]:
    return value.as_int()


def poly_from_roots(roots: Iterable[CyclotomicInteger]) -> IntPolynomial:
    """Monic integer polynomial with the given distinct cyclotomic roots.

    Expands the product of (X - sigma) exactly over a common order and
    descends every coefficient to Z; raises NonIntegerCoefficient when a
    coefficient is irrational (impossible for Galois-stable root sets).
    """
    rs = list(roots)
    if not rs:
        return IntPolynomial.constant(1)
    target = 1
    for r in rs:
        target = lcm(target, r.order)
    cyclotomic_polynomial(target)
    rs = sorted((r.lift(target) for r in rs), key=lambda r: r.sort_key())
    if len(set(rs)) != len(rs):
        raise ValueError("duplicate roots")
    one = CyclotomicInteger.from_int(1, target)
    coeffs: list[CyclotomicInteger] = [one]
    for sigma in rs:
        nxt = [CyclotomicInteger.from_int(0, target)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - sigma * c
        coeffs = nxt
    out = []
    for k, c in enumerate(coeffs):
        n = c.as_int()
        if n is None:
            raise NonIntegerCoefficient(
                f"coefficient of X^{k} is not a rational integer: {c}"
            )
        out.append(n)
    return IntPolynomial(out)
