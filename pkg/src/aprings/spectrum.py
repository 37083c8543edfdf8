"""Signatures, prime-ideal descriptors and structure predicates.

A signature is a surjective ring homomorphism onto Z; its kernel is a
signature ideal.  For basis models the minimal primes are the kernels
of the character maps phi_chi(sum a_i s_i) = sum a_i chi(s_i) into a
ring of cyclotomic integers, the maximal ideals are the congruence
ideals sigma(r) = 0 mod p, and for 2-power generating polynomials the
fundamental ideal (elements of even length) sits above everything at
index two.  Prime ideals are descriptors with decidable membership,
never materialized element sets; only the finite oracle enumerates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .config import Limits, default_limits
from .cyclotomic import CyclotomicInteger
from .errors import UnsupportedModel
from .groups import Character, characters
from .rings import (
    BurnsideModel,
    FiniteQuotientRing,
    GroupRingModel,
    ProductRing,
    ProductZRing,
    RingModel,
    ZRing,
)


# -- signatures -----------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """Ring homomorphism onto Z, given by its values on the generating set."""

    label: str
    values: tuple[int, ...]  # value on the i-th generator
    _eval: Callable = field(compare=False, repr=False)

    def __call__(self, r) -> int:
        return self._eval(r)


def signatures(model: RingModel) -> list[Signature]:
    """The complete list of signatures of the model.

    A finite ring admits none: its characteristic is positive, while a
    homomorphism onto Z would force characteristic zero.
    """
    if isinstance(model, ZRing):
        return [Signature(label="id", values=(1,), _eval=lambda r: r)]
    if isinstance(model, ProductZRing):
        out = []
        for i in range(model.k):
            values = tuple(1 if j == i else 0 for j in range(model.k))
            out.append(
                Signature(label=f"pi{i}", values=values, _eval=lambda r, i=i: r[i])
            )
        return out
    if isinstance(model, GroupRingModel):
        if model.group.exponent > 2:
            raise UnsupportedModel(
                "signature enumeration needs an exponent-2 group"
            )
        out = []
        for chi in characters(model.group, 2):
            values = tuple(
                _as_sign(chi.value(g)) for g in model.basis
            )
            out.append(
                Signature(
                    label="sigma(" + ",".join("+" if v == 1 else "-" for v in values) + ")",
                    values=values,
                    _eval=lambda r, values=values: sum(c * v for c, v in zip(r, values)),
                )
            )
        return out
    if isinstance(model, BurnsideModel):
        out = []
        M = model.table.marks
        for j, cls in enumerate(model.table.classes):
            column = tuple(M[i][j] for i in range(model.k))
            out.append(
                Signature(
                    label=f"phi[{cls.label}]",
                    values=column,
                    _eval=lambda r, column=column: sum(
                        c * v for c, v in zip(r, column)
                    ),
                )
            )
        return out
    if isinstance(model, FiniteQuotientRing):
        assert model.characteristic() > 0
        return []
    if isinstance(model, ProductRing):
        out = []
        for side, sub in (("L", model.left), ("R", model.right)):
            for sig in signatures(sub):
                idx = 0 if side == "L" else 1
                out.append(
                    Signature(
                        label=f"{side}.{sig.label}",
                        values=sig.values,
                        _eval=lambda r, sig=sig, idx=idx: sig(r[idx]),
                    )
                )
        return out
    raise UnsupportedModel(f"no signature strategy for {model.name}")


def _as_sign(value: CyclotomicInteger) -> int:
    n = value.as_int()
    if n not in (1, -1):
        raise UnsupportedModel("character value is not a sign")
    return n


# -- prime ideal descriptors --------------------------------------------------------


@dataclass(frozen=True)
class PrimeIdeal:
    """Descriptor with a decidable membership test."""

    kind: str  # signature | signature_plus_p | fundamental | character | dress
    label: str
    prime: Optional[int] = None
    _member: Callable = field(compare=False, repr=False, default=None)

    def contains(self, r) -> bool:
        return self._member(r)

    def to_json(self) -> dict:
        data = {"kind": self.kind, "label": self.label}
        if self.prime is not None:
            data["prime"] = self.prime
        return data


def signature_ideal(sig: Signature) -> PrimeIdeal:
    return PrimeIdeal(
        kind="signature",
        label=f"ker {sig.label}",
        _member=lambda r: sig(r) == 0,
    )


def signature_plus_p(sig: Signature, p: int) -> PrimeIdeal:
    return PrimeIdeal(
        kind="signature_plus_p",
        label=f"ker {sig.label} + ({p})",
        prime=p,
        _member=lambda r: sig(r) % p == 0,
    )


def character_ideal(model: GroupRingModel, chi: Character) -> PrimeIdeal:
    def member(r) -> bool:
        return _character_value(model, chi, r).is_zero

    return PrimeIdeal(kind="character", label=f"ker phi_{chi.label()}", _member=member)


def _character_value(model: GroupRingModel, chi: Character, r) -> CyclotomicInteger:
    total = CyclotomicInteger.from_int(0, chi.target_order)
    for coeff, g in zip(r, model.basis):
        if coeff:
            total = total + coeff * chi.value(g)
    return total


def dress_ideal(model: BurnsideModel, class_index: int, p: int) -> PrimeIdeal:
    """p_(U,p): mark congruent to 0 mod p (p = 0 means mark equal to 0)."""
    M = model.table.marks
    column = tuple(M[i][class_index] for i in range(model.k))
    label = model.table.classes[class_index].label

    def member(r) -> bool:
        value = sum(c * v for c, v in zip(r, column))
        return value == 0 if p == 0 else value % p == 0

    return PrimeIdeal(
        kind="dress",
        label=f"p[{label},{p}]",
        prime=p if p else None,
        _member=member,
    )


def fundamental_ideal(model: RingModel) -> PrimeIdeal:
    """Elements of even length.  Defined for 2-power generating
    polynomials, where length parity is a homomorphism onto Z/2 exactly
    when the model is admissible."""
    _require_two_power(model)
    return PrimeIdeal(
        kind="fundamental",
        label="I",
        prime=2,
        _member=lambda r: model.length(r) % 2 == 0,
    )


def _exponent_of(model: RingModel) -> Optional[int]:
    if isinstance(model, ZRing):
        return 2
    if isinstance(model, (GroupRingModel, FiniteQuotientRing)):
        return model.group.exponent
    return None


def _is_two_power(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _require_two_power(model: RingModel) -> int:
    e = _exponent_of(model)
    if e is None or not _is_two_power(e):
        raise UnsupportedModel(
            f"{model.name} does not have a 2-power generating polynomial"
        )
    return e


# -- minimal primes ---------------------------------------------------------------


def minimal_primes(model: RingModel) -> list[PrimeIdeal]:
    """Kernels of the character maps on the generating monoid."""
    if isinstance(model, ZRing):
        return [signature_ideal(signatures(model)[0])]
    if isinstance(model, ProductZRing):
        return [signature_ideal(sig) for sig in signatures(model)]
    if isinstance(model, GroupRingModel):
        return [
            character_ideal(model, chi)
            for chi in characters(model.group, model.group.exponent)
        ]
    if isinstance(model, BurnsideModel):
        return [dress_ideal(model, j, 0) for j in range(model.k)]
    raise UnsupportedModel(
        f"minimal primes need a basis model, not {model.name}"
    )


# -- admissibility ------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityResult:
    admissible: bool
    witness: str

    def __bool__(self) -> bool:
        return self.admissible


def is_admissible(model: RingModel) -> AdmissibilityResult:
    """No odd characteristic, equivalently |R/I| = 2, equivalently no
    vanishing signed generator sum of odd size."""
    _require_two_power(model)
    c = model.characteristic()
    if c == 0:
        return AdmissibilityResult(True, "characteristic 0")
    if c % 2 == 0:
        return AdmissibilityResult(True, f"characteristic {c} is even")
    return AdmissibilityResult(False, f"characteristic {c} is odd")


def fundamental_ideal_elements(model: FiniteQuotientRing) -> frozenset:
    """The ideal generated by 1 -+ s over generators s, materialized.

    b(1-a) = (1-ba) - (1-b), so the ideal equals the additive span of
    its generators; closure is a plain subgroup computation.
    """
    seeds = set()
    one = model.one()
    for _, s in model.generators():
        seeds.add(model.sub(one, s))
        seeds.add(model.add(one, s))
    closed = {model.zero()}
    frontier = [model.zero()]
    while frontier:
        nxt = []
        for v in frontier:
            for s in seeds:
                w = model.add(v, s)
                if w not in closed:
                    closed.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(closed)


def ap_condition_check(model: RingModel, k: int, limits: Optional[Limits] = None) -> bool:
    """Arason-Pfister condition AP(k): every sum of fewer than 2^k
    signed generators lying in I^k is zero.  Decided exhaustively, so
    the model must be finite."""
    if not model.is_finite():
        raise UnsupportedModel("AP(k) is decided exhaustively; model must be finite")
    if k < 1:
        raise ValueError("k must be positive")
    ideal = fundamental_ideal_elements(model)
    power = ideal
    for _ in range(k - 1):
        products = {model.mul(x, y) for x in power for y in ideal}
        power = _additive_span(model, products)
    ball = _short_sums(model, 2**k - 1)
    zero = model.zero()
    return all(r == zero for r in ball & power)


def _additive_span(model: RingModel, seeds) -> frozenset:
    closed = {model.zero()}
    frontier = [model.zero()]
    seeds = set(seeds)
    while frontier:
        nxt = []
        for v in frontier:
            for s in seeds:
                w = model.add(v, s)
                if w not in closed:
                    closed.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(closed)


def _short_sums(model: RingModel, radius: int) -> set:
    moves = []
    for _, s in model.generators():
        moves.append(s)
        moves.append(model.neg(s))
    seen = {model.zero()}
    frontier = [model.zero()]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for m in moves:
                w = model.add(v, m)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


# -- element predicates -----------------------------------------------------------------


@dataclass(frozen=True)
class ElementPredicates:
    nilpotent: Optional[bool]
    torsion: Optional[bool]
    unit: Optional[bool]
    zero_divisor: Optional[bool]
    idempotent: Optional[bool]
    in_fundamental: Optional[bool]
    in_every_signature_ideal: Optional[bool]

    def unsupported(self) -> tuple[str, ...]:
        return tuple(
            name
            for name in (
                "nilpotent",
                "torsion",
                "unit",
                "zero_divisor",
                "idempotent",
                "in_fundamental",
                "in_every_signature_ideal",
            )
            if getattr(self, name) is None
        )

    def to_json(self) -> dict:
        return {
            "nilpotent": self.nilpotent,
            "torsion": self.torsion,
            "unit": self.unit,
            "zero_divisor": self.zero_divisor,
            "idempotent": self.idempotent,
            "in_fundamental": self.in_fundamental,
            "in_every_signature_ideal": self.in_every_signature_ideal,
        }


def element_predicates(
    model: RingModel, r, limits: Optional[Limits] = None
) -> ElementPredicates:
    """Structure predicates for one element; zero divisors include 0."""
    idempotent = model.mul(r, r) == r
    e = _exponent_of(model)
    in_fundamental = model.length(r) % 2 == 0 if e is not None and _is_two_power(e) else None

    try:
        sigs = signatures(model)
        in_every_sig = all(sig(r) == 0 for sig in sigs)
    except UnsupportedModel:
        sigs = None
        in_every_sig = None

    if isinstance(model, (ZRing, ProductZRing)):
        coords = (r,) if isinstance(model, ZRing) else r
        return ElementPredicates(
            nilpotent=all(c == 0 for c in coords),
            torsion=all(c == 0 for c in coords),
            unit=all(c in (1, -1) for c in coords),
            zero_divisor=any(c == 0 for c in coords),
            idempotent=idempotent,
            in_fundamental=in_fundamental,
            in_every_signature_ideal=in_every_sig,
        )

    if isinstance(model, GroupRingModel):
        chars = _model_characters(model)
        values = [_character_value(model, chi, r) for chi in chars]
        nilpotent = all(v.is_zero for v in values)  # total character map is injective
        zero_divisor = any(v.is_zero for v in values)
        unit: Optional[bool]
        if model.group.exponent <= 2:
            unit = all(sig(r) in (1, -1) for sig in sigs)
        else:
            unit = None
        return ElementPredicates(
            nilpotent=nilpotent,
            torsion=(r == model.zero()),  # free Z-module
            unit=unit,
            zero_divisor=zero_divisor,
            idempotent=idempotent,
            in_fundamental=in_fundamental,
            in_every_signature_ideal=in_every_sig,
        )

    if isinstance(model, BurnsideModel):
        marks = model.marks_vector(r)
        unit = False
        if all(v in (1, -1) for v in marks):
            try:
                model.from_marks(marks)  # the inverse has the same mark vector
                unit = True
            except Exception:
                unit = False
        return ElementPredicates(
            nilpotent=all(v == 0 for v in marks),
            torsion=(r == model.zero()),
            unit=unit,
            zero_divisor=any(v == 0 for v in marks),
            idempotent=idempotent,
            in_fundamental=None,
            in_every_signature_ideal=in_every_sig,
        )

    if isinstance(model, FiniteQuotientRing):
        return _finite_predicates(model, r, idempotent, in_fundamental, in_every_sig)

    if isinstance(model, ProductRing):
        left = element_predicates(model.left, r[0], limits)
        right = element_predicates(model.right, r[1], limits)
        return ElementPredicates(
            nilpotent=_both(left.nilpotent, right.nilpotent),
            torsion=_both(left.torsion, right.torsion),
            unit=_both(left.unit, right.unit),
            zero_divisor=_either(left.zero_divisor, right.zero_divisor),
            idempotent=idempotent,
            in_fundamental=None,
            in_every_signature_ideal=in_every_sig,
        )

    raise UnsupportedModel(f"no predicate strategy for {model.name}")


def _both(a: Optional[bool], b: Optional[bool]) -> Optional[bool]:
    if a is None or b is None:
        return None
    return a and b


def _either(a: Optional[bool], b: Optional[bool]) -> Optional[bool]:
    if a is None or b is None:
        return None
    return a or b


@lru_cache(maxsize=None)
def _model_characters(model: GroupRingModel) -> tuple[Character, ...]:
    return tuple(characters(model.group, model.group.exponent))


def _finite_predicates(model, r, idempotent, in_fundamental, in_every_sig):
    zero = model.zero()
    one = model.one()
    carrier = model.carrier()

    nilpotent = False
    seen = set()
    power = r
    while power not in seen:
        seen.add(power)
        if power == zero:
            nilpotent = True
            break
        power = model.mul(power, r)

    unit = any(model.mul(r, s) == one for s in carrier)
    zero_divisor = any(model.mul(r, s) == zero for s in carrier if s != zero)
    return ElementPredicates(
        nilpotent=nilpotent,
        torsion=True,  # finite additive group
        unit=unit,
        zero_divisor=zero_divisor,
        idempotent=idempotent,
        in_fundamental=in_fundamental,
        in_every_signature_ideal=in_every_sig,
    )


# -- Dress relations ---------------------------------------------------------------------


@dataclass(frozen=True)
class DressMember:
    class_index: int
    class_label: str
    p: int  # 0 or a prime


@dataclass
class DressRelations:
    model_name: str
    members: list[DressMember]
    subset: dict  # (member, member) -> bool, semantic containment
    minimal: dict  # member -> bool, from the containment graph
    maximal: dict

    def to_json(self) -> dict:
        return {
            "model": self.model_name,
            "members": [
                {"class": m.class_label, "p": m.p} for m in self.members
            ],
            "containments": [
                {"lower": {"class": a.class_label, "p": a.p},
                 "upper": {"class": b.class_label, "p": b.p}}
                for (a, b), holds in sorted(
                    self.subset.items(),
                    key=lambda kv: (kv[0][0].class_index, kv[0][0].p,
                                    kv[0][1].class_index, kv[0][1].p),
                )
                if holds and a != b
            ],
            "minimal": {f"{m.class_label},{m.p}": v for m, v in self.minimal.items()},
            "maximal": {f"{m.class_label},{m.p}": v for m, v in self.maximal.items()},
        }


def dress_relations(model: BurnsideModel, primes: list[int]) -> DressRelations:
    """Containments among the ideals p_(U,p) for p in {0} u primes.

    Containment is decided semantically: p_(U,p) is the sublattice of
    coefficient vectors c with u.c = 0 (p = 0) or u.c = 0 mod p, where
    u is the mark column of U.  Explicit lattice generators exist
    because the column of the full-group class is all ones, and a
    sublattice is contained in a congruence ideal exactly when all its
    generators are.
    """
    M = model.table.marks
    k = model.k
    members = [
        DressMember(j, model.table.classes[j].label, p)
        for j in range(k)
        for p in [0] + sorted(set(primes))
    ]
    columns = {j: tuple(M[i][j] for i in range(k)) for j in range(k)}
    anchor = k - 1  # the all-ones row: every column has a 1 there
    assert all(columns[j][anchor] == 1 for j in range(k))

    def lattice_generators(j: int, p: int) -> list[tuple[int, ...]]:
        u = columns[j]
        gens = []
        for i in range(k):
            if i == anchor:
                continue
            vec = [0] * k
            vec[i] = 1
            vec[anchor] = -u[i]
            gens.append(tuple(vec))
        if p:
            vec = [0] * k
            vec[anchor] = p
            gens.append(tuple(vec))
        return gens

    def congruent_zero(vec: tuple[int, ...], j: int, p: int) -> bool:
        value = sum(c * v for c, v in zip(vec, columns[j]))
        return value == 0 if p == 0 else value % p == 0

    subset = {}
    for a in members:
        gens = lattice_generators(a.class_index, a.p)
        for b in members:
            subset[(a, b)] = all(
                congruent_zero(g, b.class_index, b.p) for g in gens
            )

    def strictly_below(a: DressMember, b: DressMember) -> bool:
        return subset[(a, b)] and not subset[(b, a)]

    minimal = {
        m: not any(strictly_below(other, m) for other in members) for m in members
    }
    maximal = {
        m: not any(strictly_below(m, other) for other in members) for m in members
    }
    return DressRelations(
        model_name=model.name,
        members=members,
        subset=subset,
        minimal=minimal,
        maximal=maximal,
    )


def dress_statement_predicts(
    model: BurnsideModel, a: DressMember, b: DressMember
) -> bool:
    """The containment criterion: equal congruence ideals at the same
    prime, or a p = 0 ideal below the corresponding mod-q ideal."""
    M = model.table.marks
    k = model.k
    u = tuple(M[i][a.class_index] for i in range(k))
    v = tuple(M[i][b.class_index] for i in range(k))
    if a.p == b.p:
        if a.p == 0:
            return u == v
        return all((x - y) % a.p == 0 for x, y in zip(u, v))
    if a.p == 0 and b.p != 0:
        return all((x - y) % b.p == 0 for x, y in zip(u, v))
    return False


# -- spectrum reports ---------------------------------------------------------------------


@dataclass
class MaxFamily:
    base_label: str
    primes: list[int]
    note: str

    def to_json(self) -> dict:
        return {"signature": self.base_label, "primes": self.primes, "note": self.note}


@dataclass
class FinitePrimeInfo:
    index: int
    size: int
    is_fundamental: bool

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "size": self.size,
            "fundamental": self.is_fundamental,
        }


@dataclass
class SpectrumReport:
    model_name: str
    local: bool
    minimal: list[PrimeIdeal]
    fundamental: Optional[PrimeIdeal]
    max_families: list[MaxFamily]
    finite_primes: Optional[list[FinitePrimeInfo]] = None

    def to_json(self) -> dict:
        return {
            "model": self.model_name,
            "local": self.local,
            "min": [p.to_json() for p in self.minimal],
            "max": {
                "fundamental": self.fundamental.to_json() if self.fundamental else None,
                "families": [f.to_json() for f in self.max_families],
            },
            "finite": (
                [p.to_json() for p in self.finite_primes]
                if self.finite_primes is not None
                else None
            ),
        }


def _primes_up_to(bound: int) -> list[int]:
    out = []
    for n in range(2, bound + 1):
        if all(n % p for p in out):
            out.append(n)
    return out


def spectrum_report(
    model: RingModel,
    prime_bound: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> SpectrumReport:
    """Min/Max classification of the prime spectrum.

    For finite quotients the report lists the oracle's exhaustive prime
    ideals; when the model is admissible with 2-power characteristic
    and no signatures, the list is checked to be exactly the
    fundamental ideal.
    """
    limits = limits or default_limits()
    bound = prime_bound if prime_bound is not None else limits.max_listed_prime
    primes = _primes_up_to(bound)

    if isinstance(model, FiniteQuotientRing):
        return _finite_spectrum_report(model, limits)

    if isinstance(model, (ZRing, GroupRingModel)):
        if isinstance(model, GroupRingModel) and model.group.exponent > 2:
            raise UnsupportedModel(
                "spectrum classification needs an exponent-2 group ring"
            )
        sigs = signatures(model)
        minimal = [signature_ideal(sig) for sig in sigs]
        fundamental = fundamental_ideal(model)
        families = [
            MaxFamily(
                base_label=sig.label,
                primes=[p for p in primes if p != 2],
                note="all odd primes",
            )
            for sig in sigs
        ]
        return SpectrumReport(
            model_name=model.name,
            local=False,
            minimal=minimal,
            fundamental=fundamental,
            max_families=families,
        )

    if isinstance(model, ProductZRing):
        sigs = signatures(model)
        return SpectrumReport(
            model_name=model.name,
            local=False,
            minimal=[signature_ideal(sig) for sig in sigs],
            fundamental=None,
            max_families=[
                MaxFamily(base_label=sig.label, primes=list(primes), note="all primes")
                for sig in sigs
            ],
        )

    if isinstance(model, BurnsideModel):
        minimal = [dress_ideal(model, j, 0) for j in range(model.k)]
        families = [
            MaxFamily(
                base_label=f"phi[{cls.label}]",
                primes=list(primes),
                note="all primes",
            )
            for cls in model.table.classes
        ]
        return SpectrumReport(
            model_name=model.name,
            local=False,
            minimal=minimal,
            fundamental=None,
            max_families=families,
        )

    raise UnsupportedModel(f"no spectrum classification for {model.name}")


def _finite_spectrum_report(model: FiniteQuotientRing, limits: Limits) -> SpectrumReport:
    from . import oracle

    table = oracle.table_for_model(model, limits)
    primes = oracle.prime_ideals(table, limits)
    carrier_size = len(model.carrier())
    ideal_elements = fundamental_ideal_elements(model)
    infos = []
    for P in sorted(primes, key=sorted):
        members = frozenset(table.elements[i] for i in P)
        infos.append(
            FinitePrimeInfo(
                index=carrier_size // len(P),
                size=len(P),
                is_fundamental=(members == ideal_elements),
            )
        )
    local = len(infos) == 1
    fundamental = None
    try:
        adm = is_admissible(model)
        if adm.admissible:
            fundamental = fundamental_ideal(model)
        # The {I}-only classification is provable when the ring has
        # 2-power characteristic (then every prime has index 2); an
        # even characteristic with an odd factor admits further primes.
        if adm.admissible and _is_two_power(model.characteristic()):
            assert local and infos[0].is_fundamental, (
                f"{model.name}: expected the fundamental ideal to be the "
                "only prime"
            )
    except UnsupportedModel:
        pass
    return SpectrumReport(
        model_name=model.name,
        local=local,
        minimal=[],
        fundamental=fundamental,
        max_families=[],
        finite_primes=infos,
    )
