import pytest
from hypothesis import given, strategies as st

from aprings.intpoly import IntPolynomial

coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=8)


def test_normalization_strips_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0)).is_zero
    assert IntPolynomial().degree == -1


def test_from_roots_collapses_duplicates():
    p = IntPolynomial.from_roots([1, -1, 1])
    assert p == IntPolynomial((-1, 0, 1))
    assert p.is_monic


def test_str_rendering():
    assert str(IntPolynomial((-1, 0, 1))) == "x^2 - 1"
    assert str(IntPolynomial((0, -4, 0, 1))) == "x^3 - 4*x"
    assert str(IntPolynomial()) == "0"


def test_eval_at_int():
    p = IntPolynomial((9, 0, -10, 0, 1))
    assert p(3) == 0 and p(1) == 0 and p(0) == 9


def test_divmod_exact_monic():
    a = IntPolynomial.from_roots([1, 2, 3])
    b = IntPolynomial.from_roots([2])
    q, r = divmod(a, b)
    assert r.is_zero
    assert q * b == a
    assert b.divides(a)
    assert not IntPolynomial.from_roots([5]).divides(a)


def test_divmod_inexact_raises():
    with pytest.raises(ValueError):
        divmod(IntPolynomial((0, 1)), IntPolynomial((0, 2)))


def test_json_roundtrip():
    p = IntPolynomial((10**30, -2, 3))
    assert IntPolynomial.from_json(p.to_json()) == p
    assert p.to_json()[0] == str(10**30)


@given(coeff_lists, coeff_lists)
def test_addition_matches_pointwise_evaluation(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for x in (-2, 0, 1, 3):
        assert (p + q)(x) == p(x) + q(x)
        assert (p - q)(x) == p(x) - q(x)


@given(coeff_lists, coeff_lists)
def test_multiplication_matches_pointwise_evaluation(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for x in (-1, 2):
        assert (p * q)(x) == p(x) * q(x)


@given(coeff_lists, st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=3))
def test_division_invariant(a, roots):
    p = IntPolynomial(a)
    d = IntPolynomial.from_roots(roots)
    q, r = divmod(p, d)
    assert q * d + r == p
    assert r.degree < d.degree
