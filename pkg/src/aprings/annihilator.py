"""Root-sum sets T_n and annihilating polynomials p_n.

Given a squarefree monic generating polynomial q with known complex
roots, every ring element expressible as a signed sum of n roots of q
is annihilated by p_n(X), the monic squarefree polynomial whose root
set is T_n = {sum of n signed roots}.  This module enumerates T_n
exactly and also provides the classical closed forms for the families
q = X^2 - 1 (Lewis polynomials), q = X^4 - 1 (quartic products),
q = X^(2^k) - 1 (degree and parity data) and q = X^2 - 2^k X
(Pfister chains).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Literal, Optional, Union

from .config import Limits, default_limits
from .cyclotomic import CyclotomicInteger, cyclotomic_polynomial, poly_from_roots
from .errors import BoundExceeded
from .intpoly import IntPolynomial

SignMode = Literal["signed", "unsigned"]

_MODES = ("signed", "unsigned")


@dataclass(frozen=True)
class IntegerRoots:
    """A finite set of pairwise distinct integer roots."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(set(values)) != len(values):
            raise ValueError("integer roots must be pairwise distinct")
        object.__setattr__(self, "values", tuple(sorted(values)))

    def to_json(self) -> dict:
        return {"kind": "integers", "values": list(self.values)}


@dataclass(frozen=True)
class RootsOfUnity:
    """All m-th roots of unity (not only the primitive ones)."""

    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    def to_json(self) -> dict:
        return {"kind": "roots_of_unity", "order": self.order}


Atom = Union[IntegerRoots, RootsOfUnity]


@dataclass(frozen=True)
class RootSpec:
    """Union of root atoms describing the complex roots of q(X)."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        if not atoms:
            raise ValueError("a root spec needs at least one atom")
        object.__setattr__(self, "atoms", atoms)

    @staticmethod
    def integers(*values: int) -> "RootSpec":
        return RootSpec((IntegerRoots(tuple(values)),))

    @staticmethod
    def unity(order: int) -> "RootSpec":
        return RootSpec((RootsOfUnity(order),))

    def common_order(self) -> int:
        order = 1
        for atom in self.atoms:
            if isinstance(atom, RootsOfUnity):
                order = lcm(order, atom.order)
        return order

    def roots(self) -> tuple[CyclotomicInteger, ...]:
        """All roots, lifted to the common order; duplicates are an error."""
        order = self.common_order()
        cyclotomic_polynomial(order)
        out: list[CyclotomicInteger] = []
        for atom in self.atoms:
            if isinstance(atom, IntegerRoots):
                out.extend(CyclotomicInteger.from_int(v, 1).lift(order) for v in atom.values)
            else:
                out.extend(
                    CyclotomicInteger.zeta(atom.order, j).lift(order)
                    for j in range(atom.order)
                )
        if len(set(out)) != len(out):
            raise ValueError("atoms overlap: the union of root sets must be duplicate-free")
        return tuple(sorted(out, key=lambda r: r.sort_key()))

    def to_json(self) -> dict:
        return {"atoms": [atom.to_json() for atom in self.atoms]}

    @staticmethod
    def from_json(data: dict) -> "RootSpec":
        atoms: list[Atom] = []
        for raw in data["atoms"]:
            kind = raw.get("kind")
            if kind == "integers":
                atoms.append(IntegerRoots(tuple(int(v) for v in raw["values"])))
            elif kind == "roots_of_unity":
                atoms.append(RootsOfUnity(int(raw["order"])))
            else:
                raise ValueError(f"unknown root atom kind: {kind!r}")
        return RootSpec(tuple(atoms))


@dataclass(frozen=True)
class SumSet:
    """Canonically sorted, duplicate-free set of n-fold root sums."""

    order: int
    n: int
    elements: tuple[CyclotomicInteger, ...]

    def __contains__(self, value) -> bool:
        return any(e == value for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "n": self.n,
            "elements": [[str(c) for c in e.coords] for e in self.elements],
        }


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")


def _extend(
    current: set[CyclotomicInteger],
    roots: tuple[CyclotomicInteger, ...],
    mode: SignMode,
    cap: int,
) -> set[CyclotomicInteger]:
    nxt: set[CyclotomicInteger] = set()
    for t in current:
        for r in roots:
            nxt.add(t + r)
            if mode == "signed":
                nxt.add(t - r)
            if len(nxt) > cap:
                raise BoundExceeded(f"sum set exceeds the configured cap of {cap}")
    return nxt


def root_sum_set(
    spec: RootSpec, n: int, mode: SignMode = "signed", limits: Optional[Limits] = None
) -> SumSet:
    """T_n: all values of eps_1*s_1 + ... + eps_n*s_n with the s_i
    drawn from the given roots (eps_i = 1 in unsigned mode), computed
    by iterated set extension."""
    _check_mode(mode)
    limits = limits or default_limits()
    if n < 1:
        raise ValueError("n must be positive")
    if n > limits.max_summands:
        raise BoundExceeded(f"n = {n} exceeds the summand bound {limits.max_summands}")
    return _sum_set_cached(spec, n, mode, limits)


@lru_cache(maxsize=512)
def _sum_set_cached(spec: RootSpec, n: int, mode: SignMode, limits: Limits) -> SumSet:
    roots = spec.roots()
    order = spec.common_order()
    zero = CyclotomicInteger.from_int(0, order)
    current = {zero}
    for _ in range(n):
        current = _extend(current, roots, mode, limits.max_sumset)
    elements = tuple(sorted(current, key=lambda r: r.sort_key()))
    return SumSet(order=order, n=n, elements=elements)


def mixed_annihilating_polynomial(
    specs: list[RootSpec] | tuple[RootSpec, ...],
    mode: SignMode = "signed",
    limits: Optional[Limits] = None,
) -> IntPolynomial:
    """Annihilator for sums drawing the i-th summand from specs[i]."""
    _check_mode(mode)
    limits = limits or default_limits()
    specs = tuple(specs)
    if not specs:
        raise ValueError("at least one root spec is required")
    if len(specs) > limits.max_summands:
        raise BoundExceeded(
            f"{len(specs)} summands exceed the bound {limits.max_summands}"
        )
    order = 1
    for spec in specs:
        order = lcm(order, spec.common_order())
    cyclotomic_polynomial(order)
    current = {CyclotomicInteger.from_int(0, order)}
    for spec in specs:
        roots = tuple(r.lift(order) for r in spec.roots())
        current = _extend(current, roots, mode, limits.max_sumset)
    return poly_from_roots(current)


def annihilating_polynomial(
    spec: RootSpec, n: int, mode: SignMode = "signed", limits: Optional[Limits] = None
) -> IntPolynomial:
    """p_n for the given root spec: the monic squarefree polynomial
    vanishing exactly on root_sum_set(spec, n, mode)."""
    sums = root_sum_set(spec, n, mode, limits)
    return _poly_of_sumset(sums)


@lru_cache(maxsize=512)
def _poly_of_sumset(sums: SumSet) -> IntPolynomial:
    return poly_from_roots(sums.elements)


# -- closed forms -----------------------------------------------------------


def lewis_polynomial(n: int) -> IntPolynomial:
    """Closed form of p_n for q = X^2 - 1: roots {-n, -n+2, ..., n}."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPolynomial.from_roots(range(-n, n + 1, 2))


def quartic_t(n: int) -> IntPolynomial:
    """t_n(x) = (x^4 - n^4) * prod over a+b=n, a,b >= 1, of
    (x^4 - 2(a^2-b^2)x^2 + (a^2+b^2)^2); vanishes exactly on the
    Gaussian integers a+bi with |a|+|b| = n."""
    if n < 1:
        raise ValueError("n must be positive")
    result = IntPolynomial.monomial(4) - n**4
    for a in range(1, n):
        b = n - a
        factor = IntPolynomial(
            ((a * a + b * b) ** 2, 0, -2 * (a * a - b * b), 0, 1)
        )
        result = result * factor
    return result


def quartic_p(n: int) -> IntPolynomial:
    """Closed form of p_n for q = X^4 - 1: the alternating product
    t_n * t_(n-2) * ... * t_2 * X (n even) or ... * t_1 (n odd)."""
    if n < 1:
        raise ValueError("n must be positive")
    result = IntPolynomial.constant(1)
    m = n
    while m >= 1:
        result = result * quartic_t(m)
        m -= 2
    if n % 2 == 0:
        result = result * IntPolynomial.x()
    return result


def pfister_chain_polynomial(n: int, k: int) -> IntPolynomial:
    """Closed form of p_n for q = X^2 - 2^k X under unsigned sums:
    roots {0, 2^k, 2*2^k, ..., n*2^k}."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    step = 2**k
    return IntPolynomial.from_roots(j * step for j in range(n + 1))


def degree_bound(n: int, k: int) -> int:
    """The classical bound 2^(n-1) * (2^k - 1) + 1 for deg p_n when
    q = X^(2^k) - 1.  Enumeration shows the actual |T_n| exceeds this
    for k >= 2 at small n, so treat it as a reference value, not a
    guaranteed inequality."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return 2 ** (n - 1) * (2**k - 1) + 1


# -- presets ------------------------------------------------------------------


def root_spec_preset(name: str) -> tuple[RootSpec, SignMode]:
    """Named root specs for the bundled generating polynomials.

    x2-1       roots {-1, 1}              (signed sums)
    x4-1       fourth roots of unity      (signed sums)
    x2k-1:K    2^K-th roots of unity      (signed sums)
    pfister:K  roots {0, 2^K}             (unsigned sums)
    """
    parts = name.split(":")
    key = parts[0]
    if key == "x2-1" and len(parts) == 1:
        return RootSpec.integers(-1, 1), "signed"
    if key == "x4-1" and len(parts) == 1:
        return RootSpec.unity(4), "signed"
    if key == "x2k-1" and len(parts) == 2:
        k = int(parts[1])
        if k < 0:
            raise ValueError("k must be nonnegative")
        return RootSpec.unity(2**k), "signed"
    if key == "pfister" and len(parts) == 2:
        k = int(parts[1])
        if k < 0:
            raise ValueError("k must be nonnegative")
        return RootSpec.integers(0, 2**k), "unsigned"
    raise ValueError(f"unknown root spec preset: {name!r}")


def closed_form_for_preset(name: str, n: int) -> Optional[IntPolynomial]:
    key = name.split(":")[0]
    if key == "x2-1":
        return lewis_polynomial(n)
    if key == "x4-1":
        return quartic_p(n)
    if key == "pfister":
        k = int(name.split(":")[1])
        return pfister_chain_polynomial(n, k)
    return None
