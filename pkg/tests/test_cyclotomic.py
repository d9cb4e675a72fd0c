import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multirank.cyclotomic import (
    CyclotomicInt,
    as_rational_integer,
    class_sum,
    cyclotomic_factorization_check,
    cyclotomic_ring,
    is_odd_prime,
    zeta_power,
)
from multirank.errors import DomainError, UsageError

PRIMES = (3, 5, 7, 11)


def to_complex(a):
    w = cmath.exp(2j * cmath.pi / a.t)
    return sum(c * w**k for k, c in enumerate(a.coords))


def element(t):
    return st.lists(st.integers(-30, 30), min_size=t - 1, max_size=t - 1).map(lambda cs: CyclotomicInt(t, cs))


triples = st.sampled_from(PRIMES).flatmap(lambda t: st.tuples(element(t), element(t), element(t)))


@settings(max_examples=150, deadline=None)
@given(triples)
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == a.ring.zero
    assert a * a.ring.one == a


@settings(max_examples=150, deadline=None)
@given(triples)
def test_arithmetic_matches_complex_embedding(abc):
    a, b, c = abc
    assert abs(to_complex(a * b + c) - (to_complex(a) * to_complex(b) + to_complex(c))) < 1e-6


def test_zeta3_squared():
    z = zeta_power(3, 1)
    assert z * z == zeta_power(3, 2) == CyclotomicInt(3, (-1, -1))


def test_zeta5_product_is_one():
    assert zeta_power(5, 2) * zeta_power(5, 3) == 1


@pytest.mark.parametrize("t", PRIMES)
def test_product_of_one_minus_zeta_powers_is_t(t):
    prod = cyclotomic_ring(t).one
    for j in range(1, t):
        prod = prod * (1 - zeta_power(t, j))
    assert as_rational_integer(prod) == t


def test_zeta_power_examples():
    assert zeta_power(5, 0) == 1
    assert zeta_power(5, 7) == zeta_power(5, 2)
    assert zeta_power(3, 2).coords == (-1, -1)
    assert zeta_power(7, -1) == zeta_power(7, 6)


@pytest.mark.parametrize("t", [1, 2, 4, 9, 15])
def test_zeta_power_needs_odd_prime(t):
    with pytest.raises(UsageError):
        zeta_power(t, 1)


def test_is_odd_prime():
    assert [n for n in range(30) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_as_rational_integer():
    assert as_rational_integer(CyclotomicInt(5, (5, 0, 0, 0))) == 5
    assert as_rational_integer(zeta_power(5, 1)) is None
    assert as_rational_integer(1 + zeta_power(3, 1) + zeta_power(3, 2)) == 0


@pytest.mark.parametrize("t", PRIMES)
def test_root_sum_vanishes(t):
    total = cyclotomic_ring(t).zero
    for k in range(t):
        total = total + zeta_power(t, k)
    assert not total
    assert all(c == 0 for c in total.coords)


def test_mixing_orders_is_error():
    with pytest.raises(UsageError):
        zeta_power(3, 1) + zeta_power(5, 1)
    with pytest.raises(UsageError):
        zeta_power(3, 1) * zeta_power(5, 1)


def test_wrong_coordinate_count():
    with pytest.raises(UsageError):
        CyclotomicInt(5, (1, 2, 3))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(PRIMES).flatmap(lambda t: element(t)))
def test_nonzero_non_rational_has_nonconstant_full_vector(a):
    if as_rational_integer(a) is None:
        assert len(set(a.full())) > 1


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(PRIMES).flatmap(
        lambda t: st.tuples(st.just(t), st.lists(st.integers(-5, 5), min_size=t, max_size=t))
    ),
    st.booleans(),
)
def test_class_sum_vanishes_iff_counts_equal(tc, force_equal):
    t, counts = tc
    if force_equal:
        counts = [counts[0]] * t
    vanishes = not class_sum(counts, t)
    assert vanishes == (len(set(counts)) == 1)
    assert vanishes == (abs(to_complex(class_sum(counts, t))) < 1e-9)


def test_class_sum_length_checked():
    with pytest.raises(UsageError):
        class_sum([1, 2], 3)


@pytest.mark.parametrize("t,n", [(3, 60), (5, 60), (5, 0), (7, 30)])
def test_factorization_check(t, n):
    assert cyclotomic_factorization_check(t, n)


@pytest.mark.parametrize("t", PRIMES)
def test_units_invert(t):
    ring = cyclotomic_ring(t)
    # 1 + zeta has norm 1 for odd t, so it is a unit that is not a signed root of unity
    for u in (zeta_power(t, 3), -zeta_power(t, 2), 1 + zeta_power(t, 1)):
        assert abs(u.norm()) == 1
        assert u * u.inverse() == ring.one


def test_non_unit_inverse_is_domain_error():
    with pytest.raises(DomainError):
        (1 - zeta_power(5, 1)).inverse()
    with pytest.raises(DomainError):
        cyclotomic_ring(5).inverse(2)


@pytest.mark.parametrize("t", PRIMES)
def test_norm_of_one_minus_zeta(t):
    assert (1 - zeta_power(t, 1)).norm() == t


@pytest.mark.parametrize("t", PRIMES)
def test_conjugation_is_automorphism(t):
    a = CyclotomicInt(t, range(1, t))
    b = CyclotomicInt(t, [(-1) ** k * k for k in range(t - 1)])
    for j in range(1, t):
        assert (a * b).conjugate(j) == a.conjugate(j) * b.conjugate(j)


def test_power_fast_path_matches_repeated_multiplication():
    z = zeta_power(7, 3)
    acc = cyclotomic_ring(7).one
    for k in range(12):
        assert z**k == acc
        acc = acc * z
    u = 1 + zeta_power(7, 1)
    assert u**-2 * u**2 == 1
