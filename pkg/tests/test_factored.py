"""Exact factored arithmetic: primality, factorization, FactoredInteger."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgq.errors import FactorRangeError, NotDivisibleError
from sgq.factored import (
    FactoredInteger,
    factor_integer,
    is_prime,
    totient_of_prime_power,
)

MERSENNE_61 = 2**61 - 1


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 50):
        assert is_prime(n) == (n in primes)
    assert not is_prime(0)
    assert not is_prime(1)
    assert not is_prime(-7)


def test_is_prime_pseudoprimes():
    # Carmichael numbers and strong-pseudoprime bait
    for n in (561, 1105, 1729, 2465, 2821, 3215031751, 3825123056546413051):
        assert not is_prime(n)
    assert is_prime(MERSENNE_61)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**67 - 1)  # Mersenne's famous miss


def test_factor_small_known():
    assert factor_integer(1) == {}
    assert factor_integer(2) == {2: 1}
    assert factor_integer(7920) == {2: 4, 3: 2, 5: 1, 11: 1}
    assert factor_integer(4585351680) == {2: 9, 3: 9, 5: 1, 7: 1, 13: 1}
    assert factor_integer(MERSENNE_61) == {MERSENNE_61: 1}


def test_factor_semiprime_needs_rho():
    # both factors too large for trial division alone
    p, q = 1000003, 1000033
    assert factor_integer(p * q) == {p: 1, q: 1}
    assert factor_integer(p * p) == {p: 2}


def test_factor_rejects_nonpositive():
    with pytest.raises(FactorRangeError):
        factor_integer(0)
    with pytest.raises(FactorRangeError):
        factor_integer(-12)


def test_factor_matches_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(20160)
    for _ in range(40):
        n = rng.randrange(2, 10**12)
        assert factor_integer(n) == dict(sympy.factorint(n))


@given(st.integers(min_value=1, max_value=10**9))
def test_from_int_round_trip(n):
    x = FactoredInteger.from_int(n)
    assert x.value == n
    assert math.prod(p**e for p, e in x.factors.items()) == n


@given(st.integers(min_value=1, max_value=10**9))
def test_parse_inverts_str(n):
    x = FactoredInteger.from_int(n)
    assert FactoredInteger.parse(str(x)) == x


def test_render_known_forms():
    assert str(FactoredInteger.from_int(7920)) == "2^4*3^2*5*11"
    assert str(FactoredInteger.from_int(60)) == "2^2*3*5"
    assert str(FactoredInteger.one()) == "1"
    assert FactoredInteger.parse("2^9*3^9*5*7*13").value == 4585351680


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        FactoredInteger.parse("2^4*three")
    with pytest.raises(ValueError):
        FactoredInteger.parse("2^2*2")  # repeated prime
    with pytest.raises(ValueError):
        FactoredInteger.parse("4^2")  # base not prime
    with pytest.raises(ValueError):
        FactoredInteger.parse("2^0")


def test_constructor_validates():
    with pytest.raises(ValueError):
        FactoredInteger({6: 1})
    with pytest.raises(ValueError):
        FactoredInteger({3: 0})
    with pytest.raises(ValueError):
        FactoredInteger({3: -2})


@settings(max_examples=60)
@given(
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=1, max_value=10**6),
)
def test_arithmetic_matches_int_oracle(a, b):
    x = FactoredInteger.from_int(a)
    y = FactoredInteger.from_int(b)
    assert (x * y).value == a * b
    assert x.gcd(y).value == math.gcd(a, b)
    assert x.lcm(y).value == math.lcm(a, b)
    assert x.power(3).value == a**3
    if a % b == 0:
        assert x.divide_exact(y).value == a // b


def test_divide_exact_rejects_nondivisor():
    x = FactoredInteger.from_int(60)
    with pytest.raises(NotDivisibleError):
        x.divide_exact(FactoredInteger.from_int(7))
    with pytest.raises(NotDivisibleError):
        x.divide_exact(FactoredInteger.from_int(8))  # 2^3 exceeds 2^2


def test_exponent_primes_largest():
    x = FactoredInteger.parse("2^7*3^2*5")
    assert x.exponent(2) == 7
    assert x.exponent(3) == 2
    assert x.exponent(11) == 0
    assert x.primes == frozenset({2, 3, 5})
    assert x.largest_prime() == 5
    with pytest.raises(ValueError):
        FactoredInteger.one().largest_prime()


def test_ordering_and_hash():
    a = FactoredInteger.from_int(60)
    b = FactoredInteger.from_int(168)
    assert a < b and b > a and a <= a and b >= b
    assert a == FactoredInteger.parse("2^2*3*5")
    assert hash(a) == hash(FactoredInteger.parse("2^2*3*5"))
    assert len({a, b, FactoredInteger.from_int(60)}) == 2


def test_power_domain():
    x = FactoredInteger.from_int(12)
    assert x.power(0) == FactoredInteger.one()
    with pytest.raises(ValueError):
        x.power(-1)


@pytest.mark.parametrize(
    "p, e, phi",
    [(2, 1, 1), (2, 3, 4), (3, 2, 6), (7, 1, 6), (5, 4, 500), (11, 1, 10)],
)
def test_totient_of_prime_power(p, e, phi):
    assert totient_of_prime_power(p, e).value == phi
