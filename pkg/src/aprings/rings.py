"""Concrete ring models with exact arithmetic, generating sets and lengths.

Every model carries a monic squarefree generating polynomial q, a
finite named generating set S with q(s) = 0 for each s in S (checked at
construction), and the length map: the least l such that the element is
a sum of l terms +-s with s in S.  Elements are plain hashable data
(ints, tuples, pairs); the model object owns the arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from random import Random
from typing import Iterable, Optional, Sequence

from .annihilator import (
    IntegerRoots,
    RootSpec,
    RootsOfUnity,
    annihilating_polynomial,
)
from .config import Limits, default_limits
from .cyclotomic import poly_from_roots
from .errors import (
    CarrierBoundExceeded,
    ExpressionError,
    LengthBoundExceeded,
    NonIntegralPullback,
    R2Violation,
    UnsupportedModel,
)
from .groups import FiniteAbelianGroup, TableOfMarks, named_group, table_of_marks
from .intpoly import IntPolynomial


class RingModel:
    """Common interface of all ring models."""

    kind: str = "abstract"

    def __init__(self, name: str):
        self.name = name

    # arithmetic ------------------------------------------------------

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def embed_int(self, n: int):
        """n * 1_R through ring additions (double-and-add)."""
        if n == 0:
            return self.zero()
        negate = n < 0
        n = abs(n)
        result = self.zero()
        addend = self.one()
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return self.neg(result) if negate else result

    # structure ---------------------------------------------------------

    def generators(self) -> tuple[tuple[str, object], ...]:
        """The generating set S as (label, element) pairs."""
        raise NotImplementedError

    def generating_polynomial(self) -> IntPolynomial:
        raise NotImplementedError

    def root_spec(self) -> RootSpec:
        raise NotImplementedError

    def length(self, r) -> int:
        raise NotImplementedError

    def characteristic(self) -> int:
        return 0

    def is_finite(self) -> bool:
        return False

    def carrier(self) -> list:
        raise UnsupportedModel(f"{self.name} is not a finite model")

    def random_element(self, rng: Random, max_length: int = 5):
        gens = self.generators()
        r = self.zero()
        for _ in range(rng.randint(0, max_length)):
            _, s = gens[rng.randrange(len(gens))]
            r = self.add(r, s) if rng.random() < 0.5 else self.sub(r, s)
        return r

    # validation ----------------------------------------------------------

    def _check_r2(self) -> None:
        q = self.generating_polynomial()
        for label, s in self.generators():
            if poly_eval_in_ring(q, s, self) != self.zero():
                raise R2Violation(
                    f"generator {label} of {self.name} is not a root of q"
                )

    # serialization ---------------------------------------------------------

    def element_to_json(self, r):
        raise NotImplementedError

    def element_from_json(self, data):
        raise NotImplementedError

    def format_element(self, r) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


def poly_eval_in_ring(p: IntPolynomial, r, model: RingModel):
    """Horner evaluation of p at r; integer coefficients act through
    repeated addition of 1_R (via embed_int)."""
    result = model.zero()
    for c in reversed(p.coeffs):
        result = model.add(model.mul(result, r), model.embed_int(c))
    return result


# -- Z ---------------------------------------------------------------------------


class ZRing(RingModel):
    """The rational integers with S = {1, -1} and q = X^2 - 1."""

    kind = "Z"

    def __init__(self):
        super().__init__("Z")
        self._check_r2()

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def embed_int(self, n):
        return n

    def generators(self):
        return (("1", 1),)

    def generating_polynomial(self):
        return IntPolynomial((-1, 0, 1))

    def root_spec(self):
        return RootSpec.integers(-1, 1)

    def length(self, r):
        return abs(r)

    def element_to_json(self, r):
        return str(r)

    def element_from_json(self, data):
        return int(data)

    def format_element(self, r):
        return str(r)


# -- products of copies of Z -------------------------------------------------------


class ProductZRing(RingModel):
    """Z^k with S = {e_i} and q = X^3 - X."""

    kind = "product_z"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        super().__init__(f"Z^{k}")
        self._check_r2()

    def zero(self):
        return (0,) * self.k

    def one(self):
        return (1,) * self.k

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def embed_int(self, n):
        return (n,) * self.k

    def generators(self):
        out = []
        for i in range(self.k):
            e = [0] * self.k
            e[i] = 1
            out.append((f"e{i}", tuple(e)))
        return tuple(out)

    def generating_polynomial(self):
        return IntPolynomial((0, -1, 0, 1))

    def root_spec(self):
        return RootSpec.integers(-1, 0, 1)

    def length(self, r):
        return sum(abs(x) for x in r)

    def element_to_json(self, r):
        return [str(x) for x in r]

    def element_from_json(self, data):
        vec = tuple(int(x) for x in data)
        if len(vec) != self.k:
            raise ExpressionError(f"expected {self.k} coordinates")
        return vec

    def format_element(self, r):
        return "(" + ", ".join(str(x) for x in r) + ")"


# -- group rings ------------------------------------------------------------------


class GroupRingModel(RingModel):
    """Z[G] for a finite abelian G, with S = G and q = X^exp(G) - 1.

    Elements are dense coefficient tuples over the sorted group
    elements; index 0 is the identity.
    """

    kind = "group_ring"

    def __init__(self, group: FiniteAbelianGroup, name: Optional[str] = None):
        self.group = group
        self.basis = group.elements()
        self.index = {g: i for i, g in enumerate(self.basis)}
        self.mult_index = tuple(
            tuple(self.index[group.add(a, b)] for b in self.basis) for a in self.basis
        )
        super().__init__(name or f"Z[{group.describe()}]")
        self._labels = tuple(self._basis_label(g) for g in self.basis)
        self._check_r2()

    def _basis_label(self, g: tuple[int, ...]) -> str:
        if all(x == 0 for x in g):
            return "1"
        parts = []
        for i, e in enumerate(g):
            if e == 0:
                continue
            gen = "g" if self.group.rank == 1 else f"g{i}"
            parts.append(gen if e == 1 else f"{gen}^{e}")
        return "*".join(parts)

    def zero(self):
        return (0,) * len(self.basis)

    def one(self):
        out = [0] * len(self.basis)
        out[0] = 1
        return tuple(out)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [0] * len(self.basis)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = self.mult_index[i]
            for j, y in enumerate(b):
                if y:
                    out[row[j]] += x * y
        return tuple(out)

    def embed_int(self, n):
        out = [0] * len(self.basis)
        out[0] = n
        return tuple(out)

    def basis_element(self, g: tuple[int, ...]):
        out = [0] * len(self.basis)
        out[self.index[g]] = 1
        return tuple(out)

    def generators(self):
        return tuple(
            (label, self.basis_element(g)) for label, g in zip(self._labels, self.basis)
        )

    def generating_polynomial(self):
        e = self.group.exponent
        return IntPolynomial.monomial(e) - 1

    def root_spec(self):
        return RootSpec.unity(self.group.exponent)

    def length(self, r):
        # S is an additive basis, so the minimal signed decomposition is
        # the coefficient L1 norm.
        return sum(abs(x) for x in r)

    def element_to_json(self, r):
        return [[label, str(c)] for label, c in zip(self._labels, r) if c]

    def element_from_json(self, data):
        out = [0] * len(self.basis)
        lookup = {label: i for i, label in enumerate(self._labels)}
        for label, value in data:
            if label not in lookup:
                raise ExpressionError(f"unknown basis label {label!r}")
            out[lookup[label]] = int(value)
        return tuple(out)

    def format_element(self, r):
        return _format_combination(zip(self._labels, r))


# -- Burnside rings ----------------------------------------------------------------


class BurnsideModel(RingModel):
    """Burnside ring presented by a table of marks.

    Elements are coefficient tuples over the subgroup classes.  The
    mark map sends x to its vector of fixed-point counts; it is an
    injective ring homomorphism into a product of copies of Z, so
    multiplication is pointwise in mark space followed by the
    triangular pullback.
    """

    kind = "burnside"

    def __init__(self, table: TableOfMarks, name: Optional[str] = None):
        self.table = table
        self.k = table.size
        one_rows = [
            i for i in range(self.k) if all(v == 1 for v in table.marks[i])
        ]
        if len(one_rows) != 1:
            raise ValueError("the table must have exactly one all-ones row")
        self._one_idx = one_rows[0]
        super().__init__(name or f"Burnside({table.group_order})")
        self._labels = tuple(f"c{c.label}" for c in table.classes)
        self._check_r2()

    def zero(self):
        return (0,) * self.k

    def one(self):
        out = [0] * self.k
        out[self._one_idx] = 1
        return tuple(out)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def marks_vector(self, x) -> tuple[int, ...]:
        M = self.table.marks
        return tuple(
            sum(x[i] * M[i][j] for i in range(self.k)) for j in range(self.k)
        )

    def from_marks(self, v: Sequence[int]) -> tuple[int, ...]:
        """Solve the (transposed, triangular) mark system exactly."""
        M = self.table.marks
        out = [0] * self.k
        for j in range(self.k - 1, -1, -1):
            acc = v[j] - sum(M[i][j] * out[i] for i in range(j + 1, self.k))
            if acc % M[j][j]:
                raise NonIntegralPullback(
                    f"mark vector {tuple(v)} has no integral preimage"
                )
            out[j] = acc // M[j][j]
        return tuple(out)

    def mul(self, a, b):
        va = self.marks_vector(a)
        vb = self.marks_vector(b)
        return self.from_marks(tuple(x * y for x, y in zip(va, vb)))

    def embed_int(self, n):
        out = [0] * self.k
        out[self._one_idx] = n
        return tuple(out)

    def generators(self):
        out = []
        for i, label in enumerate(self._labels):
            e = [0] * self.k
            e[i] = 1
            out.append((label, tuple(e)))
        return tuple(out)

    def generating_polynomial(self):
        return IntPolynomial.from_roots(self.table.distinct_entries())

    def root_spec(self):
        return RootSpec.integers(*self.table.distinct_entries())

    def length(self, r):
        return sum(abs(x) for x in r)

    def element_to_json(self, r):
        return [[label, str(c)] for label, c in zip(self._labels, r) if c]

    def element_from_json(self, data):
        out = [0] * self.k
        lookup = {label: i for i, label in enumerate(self._labels)}
        for label, value in data:
            if label not in lookup:
                raise ExpressionError(f"unknown basis label {label!r}")
            out[lookup[label]] = int(value)
        return tuple(out)

    def format_element(self, r):
        return _format_combination(zip(self._labels, r))


# -- finite quotients ---------------------------------------------------------------


class FiniteQuotientRing(RingModel):
    """(Z/N)[G] modulo the ideal generated by the given elements.

    The carrier is materialized (it must fit the configured bound);
    elements are the lexicographically minimal coset representatives.
    Generating set and polynomial are inherited from Z[G].
    """

    kind = "finite_quotient"

    def __init__(
        self,
        modulus: int,
        group: FiniteAbelianGroup,
        ideal_generators: Iterable[Sequence[int]] = (),
        name: Optional[str] = None,
        limits: Optional[Limits] = None,
    ):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        limits = limits or default_limits()
        self.modulus = modulus
        self.group = group
        self.basis = group.elements()
        size = modulus ** len(self.basis)
        if size > limits.max_carrier:
            raise CarrierBoundExceeded(
                f"carrier size {size} exceeds the bound {limits.max_carrier}"
            )
        self.index = {g: i for i, g in enumerate(self.basis)}
        self.mult_index = tuple(
            tuple(self.index[group.add(a, b)] for b in self.basis) for a in self.basis
        )
        gens = [self._normalize(v) for v in ideal_generators]
        kernel = self._ideal_closure(gens)
        self._rep = self._coset_reps(kernel, size)
        self._carrier = sorted(set(self._rep.values()))
        self.kernel_size = len(kernel)
        super().__init__(name or f"Z{modulus}[{group.describe()}]")
        self._labels = tuple(self._basis_label(g) for g in self.basis)
        self._length_cache: Optional[dict] = None
        self._limits = limits
        self._check_r2()

    def _basis_label(self, g):
        if all(x == 0 for x in g):
            return "1"
        parts = []
        for i, e in enumerate(g):
            if e == 0:
                continue
            gen = "g" if self.group.rank == 1 else f"g{i}"
            parts.append(gen if e == 1 else f"{gen}^{e}")
        return "*".join(parts)

    def _normalize(self, vec) -> tuple[int, ...]:
        vec = tuple(int(x) % self.modulus for x in vec)
        if len(vec) != len(self.basis):
            raise ValueError("ideal generator has the wrong number of coordinates")
        return vec

    def _translate(self, vec, by_index: int) -> tuple[int, ...]:
        out = [0] * len(vec)
        row = self.mult_index[by_index]
        for j, c in enumerate(vec):
            out[row[j]] = c
        return tuple(out)

    def _vec_add(self, a, b):
        return tuple((x + y) % self.modulus for x, y in zip(a, b))

    def _ideal_closure(self, gens) -> frozenset:
        zero = (0,) * len(self.basis)
        # the Z/N-span of all group translates of the generators
        seeds = {
            self._translate(g, i) for g in gens for i in range(len(self.basis))
        }
        closed = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for v in frontier:
                for s in seeds:
                    w = self._vec_add(v, s)
                    if w not in closed:
                        closed.add(w)
                        nxt.append(w)
            frontier = nxt
        return frozenset(closed)

    def _coset_reps(self, kernel, size) -> dict:
        from itertools import product as iproduct

        rep: dict = {}
        for vec in iproduct(range(self.modulus), repeat=len(self.basis)):
            if vec in rep:
                continue
            coset = sorted(self._vec_add(vec, k) for k in kernel)
            canon = coset[0]
            for member in coset:
                rep[member] = canon
        return rep

    def zero(self):
        return self._rep[(0,) * len(self.basis)]

    def one(self):
        vec = [0] * len(self.basis)
        vec[0] = 1
        return self._rep[tuple(vec)]

    def add(self, a, b):
        return self._rep[self._vec_add(a, b)]

    def neg(self, a):
        return self._rep[tuple((-x) % self.modulus for x in a)]

    def mul(self, a, b):
        out = [0] * len(self.basis)
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = self.mult_index[i]
            for j, y in enumerate(b):
                if y:
                    out[row[j]] = (out[row[j]] + x * y) % self.modulus
        return self._rep[tuple(out)]

    def embed_int(self, n):
        vec = [0] * len(self.basis)
        vec[0] = n % self.modulus
        return self._rep[tuple(vec)]

    def basis_element(self, g):
        vec = [0] * len(self.basis)
        vec[self.index[g]] = 1
        return self._rep[tuple(vec)]

    def generators(self):
        return tuple(
            (label, self.basis_element(g))
            for label, g in zip(self._labels, self.basis)
        )

    def generating_polynomial(self):
        return IntPolynomial.monomial(self.group.exponent) - 1

    def root_spec(self):
        return RootSpec.unity(self.group.exponent)

    def characteristic(self) -> int:
        one = self.one()
        acc = one
        n = 1
        while acc != self.zero():
            acc = self.add(acc, one)
            n += 1
        return n

    def is_finite(self) -> bool:
        return True

    def carrier(self) -> list:
        return list(self._carrier)

    def _lengths(self) -> dict:
        if self._length_cache is None:
            moves = []
            for _, s in self.generators():
                moves.append(s)
                moves.append(self.neg(s))
            dist = {self.zero(): 0}
            frontier = [self.zero()]
            radius = 0
            while frontier and radius < self._limits.max_length_radius:
                radius += 1
                nxt = []
                for v in frontier:
                    for m in moves:
                        w = self.add(v, m)
                        if w not in dist:
                            dist[w] = radius
                            nxt.append(w)
                frontier = nxt
            self._length_cache = dist
        return self._length_cache

    def length(self, r):
        dist = self._lengths()
        if r not in dist:
            raise LengthBoundExceeded(
                f"element not reachable within radius {self._limits.max_length_radius}"
            )
        return dist[r]

    def element_to_json(self, r):
        return [[label, str(c)] for label, c in zip(self._labels, r) if c]

    def element_from_json(self, data):
        out = [0] * len(self.basis)
        lookup = {label: i for i, label in enumerate(self._labels)}
        for label, value in data:
            if label not in lookup:
                raise ExpressionError(f"unknown basis label {label!r}")
            out[lookup[label]] = int(value) % self.modulus
        return self._rep[tuple(out)]

    def format_element(self, r):
        return _format_combination(zip(self._labels, r))


# -- binary products -----------------------------------------------------------------


class ProductRing(RingModel):
    """R1 x R2 with S = (S1 x {0}) u ({0} x S2).

    With these generators the product is additively generated and
    lengths add, but every generator has a zero coordinate, so the
    generating polynomial must vanish at 0: its root set is the union
    of the factors' roots together with 0.
    """

    kind = "product"

    def __init__(self, left: RingModel, right: RingModel, name: Optional[str] = None):
        self.left = left
        self.right = right
        super().__init__(name or f"{left.name}x{right.name}")
        self._spec = _merge_root_specs(left.root_spec(), right.root_spec())
        self._check_r2()

    def zero(self):
        return (self.left.zero(), self.right.zero())

    def one(self):
        return (self.left.one(), self.right.one())

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def embed_int(self, n):
        return (self.left.embed_int(n), self.right.embed_int(n))

    def generators(self):
        out = []
        for label, s in self.left.generators():
            out.append((f"L.{label}", (s, self.right.zero())))
        for label, s in self.right.generators():
            out.append((f"R.{label}", (self.left.zero(), s)))
        return tuple(out)

    def generating_polynomial(self):
        roots = []
        order = self._spec.common_order()
        for r in self._spec.roots():
            roots.append(r.lift(order))
        return poly_from_roots(roots)

    def root_spec(self):
        return self._spec

    def length(self, r):
        return self.left.length(r[0]) + self.right.length(r[1])

    def characteristic(self) -> int:
        c1 = self.left.characteristic()
        c2 = self.right.characteristic()
        if c1 == 0 or c2 == 0:
            return 0
        return lcm(c1, c2)

    def is_finite(self) -> bool:
        return self.left.is_finite() and self.right.is_finite()

    def carrier(self) -> list:
        return [(a, b) for a in self.left.carrier() for b in self.right.carrier()]

    def element_to_json(self, r):
        return {
            "left": self.left.element_to_json(r[0]),
            "right": self.right.element_to_json(r[1]),
        }

    def element_from_json(self, data):
        return (
            self.left.element_from_json(data["left"]),
            self.right.element_from_json(data["right"]),
        )

    def format_element(self, r):
        return f"({self.left.format_element(r[0])} | {self.right.format_element(r[1])})"


def _merge_root_specs(a: RootSpec, b: RootSpec) -> RootSpec:
    """Root spec for a product model: union of the factors' roots plus 0.

    Incomparable roots-of-unity orders merge into their lcm, which may
    strictly enlarge the root set; the result still annihilates every
    generator and stays squarefree.
    """
    unity_orders: list[int] = []
    for atom in a.atoms + b.atoms:
        if isinstance(atom, RootsOfUnity):
            unity_orders.append(atom.order)
    # mu_lcm contains mu_m for every atom order m; for pairwise
    # divisible orders this is exactly the union
    kept: list[int] = [_lcm_all(unity_orders)] if unity_orders else []
    covered_ints = set()
    for o in kept:
        covered_ints.add(1)
        if o % 2 == 0:
            covered_ints.add(-1)
    ints = {0}
    for atom in a.atoms + b.atoms:
        if isinstance(atom, IntegerRoots):
            ints.update(atom.values)
    ints -= covered_ints
    atoms: list = [RootsOfUnity(o) for o in sorted(kept)]
    if ints:
        atoms.append(IntegerRoots(tuple(sorted(ints))))
    return RootSpec(tuple(atoms))


def _lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


# -- annihilation reports ---------------------------------------------------------------


@dataclass(frozen=True)
class AnnihilationReport:
    length: int
    degree: int
    annihilated: bool
    polynomial: IntPolynomial

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "degree": self.degree,
            "annihilated": self.annihilated,
            "polynomial": self.polynomial.to_json(),
        }


def verify_annihilated(
    model: RingModel, r, limits: Optional[Limits] = None
) -> AnnihilationReport:
    """Compute n = length(r), build p_n from the model's root spec
    (signed mode) and check p_n(r) = 0 by Horner evaluation."""
    n = model.length(r)
    if n == 0:
        p = IntPolynomial.x()
    else:
        p = annihilating_polynomial(model.root_spec(), n, "signed", limits)
    value = poly_eval_in_ring(p, r, model)
    return AnnihilationReport(
        length=n,
        degree=p.degree,
        annihilated=(value == model.zero()),
        polynomial=p,
    )


# -- expressions -------------------------------------------------------------------------


_TERM_SPLIT = re.compile(r"(?=[+-])")


def parse_element(model: RingModel, text: str):
    """Parse an integer combination of named generators, e.g.
    "2*g0 - 3*g1 + 1"."""
    compact = text.replace(" ", "")
    if not compact:
        raise ExpressionError("empty expression")
    labels = {label: elt for label, elt in model.generators()}
    result = model.zero()
    terms = [t for t in _TERM_SPLIT.split(compact) if t]
    for term in terms:
        sign = 1
        body = term
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if not body:
            raise ExpressionError(f"dangling sign in {text!r}")
        m = re.match(r"^(\d+)(?:\*(.*))?$", body)
        if m:
            coeff = int(m.group(1))
            rest = m.group(2)
            if rest is None or rest == "":
                result = model.add(result, model.embed_int(sign * coeff))
                continue
            if rest not in labels:
                raise ExpressionError(f"unknown generator {rest!r} in {text!r}")
            term_value = _scaled(model, labels[rest], sign * coeff)
            result = model.add(result, term_value)
            continue
        if body in labels:
            term_value = _scaled(model, labels[body], sign)
            result = model.add(result, term_value)
            continue
        raise ExpressionError(f"cannot parse term {term!r} in {text!r}")
    return result


def _scaled(model: RingModel, element, n: int):
    result = model.zero()
    negate = n < 0
    n = abs(n)
    addend = element
    while n:
        if n & 1:
            result = model.add(result, addend)
        addend = model.add(addend, addend)
        n >>= 1
    return model.neg(result) if negate else result


def _format_combination(pairs) -> str:
    parts = []
    for label, c in pairs:
        if c == 0:
            continue
        body = label if abs(c) == 1 else f"{abs(c)}*{label}"
        if label == "1":
            body = str(abs(c))
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(parts) if parts else "0"


# -- model construction and registry ------------------------------------------------------


def construct_model(spec: dict, limits: Optional[Limits] = None) -> RingModel:
    """Build a model from its JSON description."""
    kind = spec.get("kind")
    if kind == "Z":
        return ZRing()
    if kind == "product_z":
        return ProductZRing(int(spec["copies"]))
    if kind == "group_ring":
        group = FiniteAbelianGroup(tuple(int(o) for o in spec["factor_orders"]))
        return GroupRingModel(group)
    if kind == "burnside":
        G = named_group(spec["group"])
        return BurnsideModel(table_of_marks(G, limits), name=f"Burnside({spec['group']})")
    if kind == "finite_quotient":
        group = FiniteAbelianGroup(tuple(int(o) for o in spec.get("factor_orders", ())))
        return FiniteQuotientRing(
            int(spec["modulus"]),
            group,
            spec.get("ideal", ()),
            limits=limits,
        )
    if kind == "product":
        return ProductRing(
            construct_model(spec["left"], limits), construct_model(spec["right"], limits)
        )
    raise ValueError(f"unknown model kind: {kind!r}")


@lru_cache(maxsize=None)
def bundled_model(name: str) -> RingModel:
    """Named models used by the command line and the verification suite."""
    if name == "Z":
        return ZRing()
    if name == "Z^3":
        return ProductZRing(3)
    if name == "Z[C2]":
        return GroupRingModel(FiniteAbelianGroup((2,)))
    if name == "Z[C2xC2]":
        return GroupRingModel(FiniteAbelianGroup((2, 2)))
    if name == "Z[C4]":
        return GroupRingModel(FiniteAbelianGroup((4,)))
    if name.startswith("burnside-"):
        group_name = name[len("burnside-"):]
        G = named_group(group_name)
        return BurnsideModel(table_of_marks(G), name=name)
    m = re.fullmatch(r"Z(\d+)\[(C\d+(?:xC\d+)*)\]", name)
    if m:
        modulus = int(m.group(1))
        orders = tuple(int(part[1:]) for part in m.group(2).split("x"))
        return FiniteQuotientRing(modulus, FiniteAbelianGroup(orders), name=name)
    m = re.fullmatch(r"Z(\d+)", name)
    if m:
        return FiniteQuotientRing(int(m.group(1)), FiniteAbelianGroup(()), name=name)
    raise ValueError(f"unknown bundled model: {name!r}")


# Finite models exercised by the oracle-agreement checks.
FINITE_BUNDLED = (
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z8",
    "Z9",
    "Z12",
    "Z2[C2]",
    "Z4[C2]",
    "Z8[C2]",
)
