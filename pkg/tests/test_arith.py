"""Arithmetic layer: factorization, totient, divisors."""
from __future__ import annotations

import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from sympy import isprime

from zdg.arith import Factorization, divisors, factorize, format_factorization, totient

PROPERTY_SETTINGS = settings(
    max_examples=250,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def test_factorize_examples():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(25).factors == ((5, 2),)
    assert factorize(1).factors == ()
    assert factorize(2).factors == ((2, 1),)
    assert factorize(97).factors == ((97, 1),)


def test_factorize_rejects_out_of_range():
    for bad in (0, -1, -12, 2**63):
        with pytest.raises(ValueError):
            factorize(bad)


def test_factorize_rejects_non_int():
    with pytest.raises(ValueError):
        factorize(12.0)  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        factorize(True)


def test_factorization_predicates():
    assert factorize(1).is_composite() is False
    assert factorize(7).is_prime() is True
    assert factorize(7).is_composite() is False
    assert factorize(4).is_composite() is True
    assert factorize(12).primes == (2, 3)


def test_totient_examples():
    assert totient(factorize(9)) == 6
    assert totient(factorize(12)) == 4
    assert totient(factorize(1)) == 1
    assert totient(factorize(13)) == 12


def test_divisors_examples():
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    assert divisors(factorize(27)) == [1, 3, 9, 27]
    assert divisors(factorize(7)) == [1, 7]
    assert divisors(factorize(1)) == [1]


def test_format_factorization():
    assert format_factorization(factorize(12)) == "2^2*3"
    assert format_factorization(factorize(1)) == "1"
    assert format_factorization(factorize(30)) == "2*3*5"
    assert format_factorization(factorize(8)) == "2^3"


def test_factorize_large_square():
    p = 1000003
    f = factorize(p * p)
    assert f.factors == ((p, 2),)


@PROPERTY_SETTINGS
@given(st.integers(min_value=1, max_value=10**6))
def test_factorization_reconstructs_and_is_prime(n):
    f = factorize(n)
    prod = 1
    for p, a in f.factors:
        assert a >= 1
        assert isprime(p)
        prod *= p**a
    assert prod == n
    assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})


@PROPERTY_SETTINGS
@given(st.integers(min_value=1, max_value=10**6))
def test_divisor_count_matches_exponents(n):
    f = factorize(n)
    divs = divisors(f)
    expected = math.prod(a + 1 for _, a in f.factors)
    assert len(divs) == expected
    assert divs == sorted(set(divs))
    assert all(n % d == 0 for d in divs)


@PROPERTY_SETTINGS
@given(st.integers(min_value=1, max_value=10**6))
def test_totient_sum_over_divisors(n):
    # sum of totient(n/d) over all divisors d of n gives n back
    f = factorize(n)
    assert sum(totient(factorize(n // d)) for d in divisors(f)) == n


def test_totient_sum_exhaustive_small():
    for n in range(1, 2001):
        f = factorize(n)
        assert sum(totient(factorize(n // d)) for d in divisors(f)) == n


def test_factorization_is_frozen():
    f = factorize(12)
    with pytest.raises(AttributeError):
        f.n = 13  # type: ignore[misc]
    assert f == Factorization(12, ((2, 2), (3, 1)))
