import pytest
from hypothesis import given, strategies as st

from aprings.cyclotomic import (
    CyclotomicInteger,
    as_rational_integer,
    cyclotomic_polynomial,
    euler_phi,
    moebius,
    poly_from_roots,
    root_of_unity,
)
from aprings.errors import NonIntegerCoefficient, UnsupportedOrder
from aprings.intpoly import IntPolynomial


def test_cyclotomic_base_cases():
    assert cyclotomic_polynomial(1) == IntPolynomial((-1, 1))
    assert cyclotomic_polynomial(4) == IntPolynomial((1, 0, 1))
    assert cyclotomic_polynomial(8) == IntPolynomial((1, 0, 0, 0, 1))
    assert cyclotomic_polynomial(12) == IntPolynomial((1, 0, -1, 0, 1))


@pytest.mark.parametrize("m", range(1, 65))
def test_divisor_product_identity(m):
    product = IntPolynomial.constant(1)
    for d in range(1, m + 1):
        if m % d == 0:
            product = product * cyclotomic_polynomial(d)
    assert product == IntPolynomial.monomial(m) - 1


def test_degree_cap():
    with pytest.raises(UnsupportedOrder):
        cyclotomic_polynomial(101)  # phi(101) = 100 > 64


def test_roots_of_unity():
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 3) == -1 * root_of_unity(4, 1)
    assert root_of_unity(1, 0) == 1
    for m in (1, 2, 3, 4, 6, 8, 12):
        z = root_of_unity(m)
        assert z**m == 1


def test_i_squared():
    i = root_of_unity(4)
    assert i * i == -1


def test_gaussian_product():
    i = root_of_unity(4)
    assert (1 + i) * (1 - i) == 2


def test_additive_inverse():
    z = root_of_unity(8)
    assert (1 + z) + (-1 - z) == 0


def test_as_rational_integer():
    assert as_rational_integer(CyclotomicInteger.from_int(5)) == 5
    assert as_rational_integer(root_of_unity(4)) is None
    i = root_of_unity(4)
    assert as_rational_integer((1 + i) + (1 - i)) == 2


def test_cross_order_equality_and_hash():
    i4 = root_of_unity(4)
    i8 = root_of_unity(8) ** 2
    assert i4 == i8
    assert hash(i4) == hash(i8)
    two_at_8 = CyclotomicInteger.from_int(2, 8)
    assert two_at_8 == 2
    assert hash(two_at_8) == hash(2)
    assert len({i4, i8}) == 1


def test_lift_roundtrip():
    z = root_of_unity(3)
    lifted = z.lift(12)
    assert lifted == z
    assert lifted.order == 12


def test_poly_from_roots_simple():
    roots = [CyclotomicInteger.from_int(v) for v in (-1, 1)]
    assert poly_from_roots(roots) == IntPolynomial((-1, 0, 1))
    roots = [CyclotomicInteger.from_int(v) for v in (-2, 0, 2)]
    assert poly_from_roots(roots) == IntPolynomial((0, -4, 0, 1))


def test_poly_from_roots_gaussian():
    i = root_of_unity(4)
    roots = [1 + i, 1 - i, -1 + i, -1 - i]
    roots += [CyclotomicInteger.from_int(v).lift(4) for v in (-2, 2, 0)]
    roots += [2 * i, -2 * i]
    p = poly_from_roots(roots)
    # x (x^4 - 16) (x^4 + 4)
    expected = (
        IntPolynomial.x()
        * (IntPolynomial.monomial(4) - 16)
        * (IntPolynomial.monomial(4) + 4)
    )
    assert p == expected


def test_poly_from_roots_evaluates_to_zero_at_roots():
    z = root_of_unity(8)
    roots = [z**j for j in range(8)]
    p = poly_from_roots(roots)
    assert p == IntPolynomial.monomial(8) - 1
    for r in roots:
        assert p(r) == 0


def test_poly_from_roots_rejects_unstable_sets():
    with pytest.raises(NonIntegerCoefficient):
        poly_from_roots([root_of_unity(4)])


def test_poly_from_roots_rejects_duplicates():
    with pytest.raises(ValueError):
        poly_from_roots([root_of_unity(4), root_of_unity(8) ** 2])


def test_moebius_and_phi():
    assert [moebius(n) for n in (1, 2, 3, 4, 6, 12)] == [1, -1, -1, 0, 1, 0]
    assert [euler_phi(n) for n in (1, 2, 8, 12)] == [1, 1, 4, 4]


orders = st.sampled_from([1, 2, 3, 4, 6, 8, 12])
small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def cyclotomics(draw):
    m = draw(orders)
    d = euler_phi(m)
    coords = draw(st.lists(small_ints, min_size=d, max_size=d))
    return CyclotomicInteger(m, coords)


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a * 1 == a and a * 0 == 0


@given(cyclotomics())
def test_json_roundtrip(a):
    assert CyclotomicInteger.from_json(a.to_json()) == a


@given(small_ints)
def test_integer_embedding_roundtrip(n):
    assert as_rational_integer(CyclotomicInteger.from_int(n, 8)) == n
