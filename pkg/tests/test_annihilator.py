"""Sum-set enumeration against a naive brute force, plus the closed forms."""

import itertools

import pytest

from aprings.annihilator import (
    RootSpec,
    annihilating_polynomial,
    degree_bound,
    lewis_polynomial,
    mixed_annihilating_polynomial,
    pfister_chain_polynomial,
    quartic_p,
    quartic_t,
    root_spec_preset,
    root_sum_set,
)
from aprings.config import Limits
from aprings.cyclotomic import CyclotomicInteger, root_of_unity
from aprings.errors import BoundExceeded
from aprings.intpoly import IntPolynomial

WIDE = Limits(max_summands=12)


def brute_sum_set(spec: RootSpec, n: int, mode: str) -> set:
    """Independent oracle: full tuple enumeration over roots and signs."""
    roots = spec.roots()
    order = spec.common_order()
    zero = CyclotomicInteger.from_int(0, order)
    out = set()
    sign_choices = [(1, -1)] * n if mode == "signed" else [(1,)] * n
    for tup in itertools.product(roots, repeat=n):
        for signs in itertools.product(*sign_choices):
            total = zero
            for s, r in zip(signs, tup):
                total = total + r if s == 1 else total - r
            out.add(total)
    return out


@pytest.mark.parametrize("mode", ["signed", "unsigned"])
@pytest.mark.parametrize(
    "spec",
    [
        RootSpec.integers(-1, 1),
        RootSpec.integers(0, 2),
        RootSpec.integers(-2, 1, 3),
        RootSpec.unity(4),
        RootSpec.unity(8),
    ],
    ids=["pm1", "pfister", "lopsided", "mu4", "mu8"],
)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sum_set_matches_brute_force(spec, n, mode):
    fast = set(root_sum_set(spec, n, mode).elements)
    assert fast == brute_sum_set(spec, n, mode)


def test_sum_set_spec_examples():
    assert {e.as_int() for e in root_sum_set(RootSpec.integers(-1, 1), 2).elements} == {
        -2,
        0,
        2,
    }
    i = root_of_unity(4)
    expected = {0 * i, 2 + 0 * i, -2 + 0 * i, 2 * i, -2 * i, 1 + i, 1 - i, -1 + i, -1 - i}
    assert set(root_sum_set(RootSpec.unity(4), 2).elements) == expected
    unsigned = root_sum_set(RootSpec.integers(0, 2), 2, "unsigned")
    assert {e.as_int() for e in unsigned.elements} == {0, 2, 4}


def test_sum_set_is_sorted_and_deduplicated():
    s = root_sum_set(RootSpec.integers(-1, 1), 4)
    values = [e.as_int() for e in s.elements]
    assert values == sorted(values) == [-4, -2, 0, 2, 4]


def test_summand_bound():
    with pytest.raises(BoundExceeded):
        root_sum_set(RootSpec.integers(-1, 1), 9)  # default cap is 8
    with pytest.raises(BoundExceeded):
        root_sum_set(RootSpec.unity(8), 4, limits=Limits(max_sumset=10))


def test_mixed_annihilator_spec_example():
    p = mixed_annihilating_polynomial(
        [RootSpec.integers(-1, 1), RootSpec.integers(-1, 0, 1)]
    )
    assert p == IntPolynomial.from_roots([-2, -1, 0, 1, 2])


def test_mixed_single_spec_is_plain_annihilator():
    spec = RootSpec.integers(-1, 1)
    assert mixed_annihilating_polynomial([spec]) == annihilating_polynomial(spec, 1)
    assert annihilating_polynomial(spec, 1) == IntPolynomial((-1, 0, 1))


def test_lewis_examples():
    assert lewis_polynomial(1) == IntPolynomial((-1, 0, 1))
    assert lewis_polynomial(2) == IntPolynomial.from_roots([-2, 0, 2])
    assert lewis_polynomial(4) == IntPolynomial.from_roots([-4, -2, 0, 2, 4])


@pytest.mark.parametrize("n", range(1, 11))
def test_lewis_equals_enumeration(n):
    assert lewis_polynomial(n) == annihilating_polynomial(
        RootSpec.integers(-1, 1), n, "signed", WIDE
    )


def test_quartic_t_examples():
    f = lambda c, q: IntPolynomial((c, 0, q, 0, 1))
    assert quartic_t(1) == IntPolynomial((-1, 0, 0, 0, 1))
    assert quartic_t(2) == f(-16, 0) * f(4, 0)
    assert quartic_t(3) == f(-81, 0) * f(25, -6) * f(25, 6)
    assert quartic_t(4) == f(-256, 0) * f(100, -16) * f(64, 0) * f(100, 16)


def test_quartic_t_roots_are_exactly_the_l1_sphere():
    for n in range(1, 6):
        t = quartic_t(n)
        assert t.degree == 4 * n
        i = root_of_unity(4)
        for a in range(-n, n + 1):
            for b in (n - abs(a), abs(a) - n):
                assert t(a + b * i) == 0


def test_quartic_p_examples():
    x = IntPolynomial.x()
    assert quartic_p(1) == quartic_t(1)
    assert quartic_p(2) == x * quartic_t(2)
    assert quartic_p(3) == quartic_t(3) * quartic_t(1)
    assert quartic_p(4) == x * quartic_t(2) * quartic_t(4)


@pytest.mark.parametrize("n", range(1, 6))
def test_quartic_p_equals_enumeration(n):
    assert quartic_p(n) == annihilating_polynomial(RootSpec.unity(4), n, "signed", WIDE)


def test_pfister_examples():
    assert pfister_chain_polynomial(1, 0) == IntPolynomial.from_roots([0, 1])
    assert pfister_chain_polynomial(2, 1) == IntPolynomial.from_roots([0, 2, 4])
    assert pfister_chain_polynomial(3, 2) == IntPolynomial.from_roots([0, 4, 8, 12])


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_pfister_equals_enumeration(n, k):
    spec = RootSpec.integers(0, 2**k)
    assert pfister_chain_polynomial(n, k) == annihilating_polynomial(
        spec, n, "unsigned", WIDE
    )


@pytest.mark.parametrize(
    "spec",
    [RootSpec.integers(-1, 1), RootSpec.unity(4), RootSpec.unity(8), RootSpec.integers(-3, 0, 3)],
    ids=["pm1", "mu4", "mu8", "pm3"],
)
@pytest.mark.parametrize("n", range(1, 7))
def test_sign_mode_irrelevant_for_symmetric_specs(spec, n):
    signed = root_sum_set(spec, n, "signed")
    unsigned = root_sum_set(spec, n, "unsigned")
    assert signed.elements == unsigned.elements


@pytest.mark.parametrize(
    "spec,mode",
    [
        (RootSpec.integers(-1, 1), "signed"),
        (RootSpec.unity(4), "signed"),
        (RootSpec.integers(0, 2), "unsigned"),
    ],
    ids=["pm1", "mu4", "pfister"],
)
def test_nesting_and_divisibility(spec, mode):
    # all these specs have 0 in T_2, so T_n embeds in T_{n+2}
    for n in range(1, 6):
        small = set(root_sum_set(spec, n, mode).elements)
        large = set(root_sum_set(spec, n + 2, mode).elements)
        assert small <= large
        p_small = annihilating_polynomial(spec, n, mode)
        p_large = annihilating_polynomial(spec, n + 2, mode)
        assert p_small.divides(p_large)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_constant_term_odd_for_odd_n(n, k):
    p = annihilating_polynomial(RootSpec.unity(2**k), n, "signed", WIDE)
    assert p.coefficient(0) % 2 == 1


def test_degree_bound_values():
    assert degree_bound(1, 2) == 4
    assert degree_bound(3, 2) == 13
    assert degree_bound(3, 1) == 5
    p3 = annihilating_polynomial(RootSpec.integers(-1, 1), 3)
    assert p3.degree == 4 <= degree_bound(3, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_bound_holds_for_k1(n):
    p = annihilating_polynomial(RootSpec.integers(-1, 1), n, "signed", WIDE)
    assert p.degree <= degree_bound(n, 1)


def test_degree_bound_fails_for_larger_k():
    # |T_2| = 9 for the fourth roots of unity, but the bound gives 7;
    # the stated inequality is not a theorem for k >= 2 at small n.
    p = annihilating_polynomial(RootSpec.unity(4), 2)
    assert p.degree == 9 > degree_bound(2, 2)


def test_root_spec_rejects_overlap():
    with pytest.raises(ValueError):
        RootSpec(
            (RootSpec.integers(1, 2).atoms[0], RootSpec.unity(2).atoms[0])
        ).roots()


def test_root_spec_json_roundtrip():
    spec = RootSpec(
        (RootSpec.integers(0, 2).atoms[0], RootSpec.unity(4).atoms[0])
    )
    again = RootSpec.from_json(spec.to_json())
    assert again == spec


def test_presets():
    spec, mode = root_spec_preset("x2-1")
    assert mode == "signed" and {r.as_int() for r in spec.roots()} == {-1, 1}
    spec, mode = root_spec_preset("pfister:2")
    assert mode == "unsigned" and {r.as_int() for r in spec.roots()} == {0, 4}
    spec, mode = root_spec_preset("x2k-1:3")
    assert len(spec.roots()) == 8
    with pytest.raises(ValueError):
        root_spec_preset("nope")
