"""Exact element-order censuses.

The per-order counts asserted here were derived independently before
being frozen: conjugacy-class arithmetic for the alternating and linear
groups, and the self-centralizing Sylow argument for the largest primes.
"""

from __future__ import annotations

import math

import pytest

from sgq import FactoredInteger, parse_group
from sgq.census import (
    DEFAULT_CAP,
    MAX_CAP,
    alternating_prime_order_count,
    census_of,
    cyclic_census,
    derive_invariants,
    direct_product_census,
    sylow_normalizer_order,
)
from sgq.errors import CensusCapError, ConsistencyError, ParameterDomainError

# locked counts: order k -> |G(k)|
LOCKED = {
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
    "A6": {1: 1, 2: 45, 3: 80, 4: 90, 5: 144},
    "A8": {1: 1, 2: 315, 3: 1232, 4: 3780, 5: 1344, 6: 5040, 7: 5760, 15: 2688},
    "L3(4)": {1: 1, 2: 315, 3: 2240, 4: 3780, 5: 8064, 7: 5760},
    "S4(3)": {1: 1, 2: 315, 3: 800, 4: 3780, 5: 5184, 6: 5760, 9: 5760, 12: 4320},
}

LOCKED_SPECTRA = {
    "L2(7)": {1, 2, 3, 4, 7},
    "L2(8)": {1, 2, 3, 7, 9},
    "L2(11)": {1, 2, 3, 5, 6, 11},
    "M11": {1, 2, 3, 4, 5, 6, 8, 11},
    "M12": {1, 2, 3, 4, 5, 6, 8, 10, 11},
    "J2": {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15},
}

LOCKED_PRIME_COUNTS = {
    "M11": {11: 1440, 5: 1584, 3: 440, 2: 165},
    "M12": {11: 17280},
    "J2": {7: 86400},
    "A10": {7: 86400},
}


@pytest.mark.parametrize("token", sorted(LOCKED))
def test_locked_censuses(token, censuses):
    census = censuses[token]
    assert {k: census.count(k) for k in census.element_orders()} == LOCKED[token]


@pytest.mark.parametrize("token", sorted(LOCKED_SPECTRA))
def test_locked_spectra(token, censuses):
    assert set(censuses[token].element_orders()) == LOCKED_SPECTRA[token]


@pytest.mark.parametrize("token", sorted(LOCKED_PRIME_COUNTS))
def test_locked_prime_counts(token, censuses):
    for p, count in LOCKED_PRIME_COUNTS[token].items():
        assert censuses[token].count(p) == count


def test_counts_partition_the_group(censuses):
    for token, census in censuses.items():
        assert census.total() == census.group_order.value, token
        assert census.count(1) == 1, token


def test_totient_divides_counts(censuses):
    # elements of order k come in phi(k)-sized cyclic generator packets
    for token, census in censuses.items():
        for k in census.element_orders():
            phi = sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)
            assert census.count(k) % phi == 0, (token, k)


def test_spectrum_is_order_closed(censuses):
    # every divisor of an element order is an element order
    for token, census in censuses.items():
        spectrum = set(census.element_orders())
        for k in spectrum:
            for d in range(1, k + 1):
                if k % d == 0:
                    assert d in spectrum, (token, k, d)


def test_count_of_absent_order(censuses):
    assert censuses["A5"].count(4) == 0
    assert censuses["L3(4)"].count(6) == 0


def test_cap_semantics():
    a5 = parse_group("A5")
    census = census_of(a5, cap=60)
    assert census.total() == 60
    for cap in (1, 5, 59):
        with pytest.raises(CensusCapError):
            census_of(a5, cap=cap)
    with pytest.raises(CensusCapError):
        census_of(parse_group("O7(3)"))  # 4.6e9 over the default cap
    assert census_of(a5, cap=61).total() == 60
    assert DEFAULT_CAP == 1 << 21
    assert MAX_CAP == 1 << 24


def test_census_thread_count_is_immaterial(censuses):
    d = parse_group("L3(4)")
    for threads in (2, 8):
        census = census_of(d, threads=threads)
        assert {k: census.count(k) for k in census.element_orders()} == LOCKED["L3(4)"]


def test_cyclic_census():
    census = cyclic_census(12)
    assert census.total() == 12
    # |Z12(k)| = phi(k) for each divisor k
    assert {k: census.count(k) for k in census.element_orders()} == {
        1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4,
    }
    with pytest.raises(ParameterDomainError):
        cyclic_census(0)


def test_direct_product_census_against_brute_force():
    a = cyclic_census(4)
    b = cyclic_census(6)
    prod = direct_product_census(a, b)
    brute: dict[int, int] = {}
    for i in range(4):
        for j in range(6):
            oi = 4 // math.gcd(4, i) if i else 1
            oj = 6 // math.gcd(6, j) if j else 1
            k = oi * oj // math.gcd(oi, oj)
            brute[k] = brute.get(k, 0) + 1
    assert {k: prod.count(k) for k in prod.element_orders()} == brute
    assert prod.total() == 24


def test_direct_product_with_alternating(censuses):
    prod = direct_product_census(censuses["A5"], cyclic_census(3))
    assert prod.total() == 180
    assert prod.count(15) == 24 * 2  # order-5 elements paired with either cube root
    assert prod.count(3) == 20 * 3 + 2


@pytest.mark.parametrize(
    "n, p, expected",
    [
        (5, 5, 24),
        (6, 5, 144),
        (7, 7, 720),
        (8, 7, 5760),
        (8, 2, 315),
        (8, 3, 1232),
        (8, 5, 1344),
        (10, 7, 86400),
        # 168 + 3360 + 2240 over one, two, three 3-cycles
        (9, 3, 5768),
    ],
)
def test_alternating_prime_order_count(n, p, expected):
    assert alternating_prime_order_count(n, p).value == expected


def test_alternating_count_matches_census(censuses):
    for n in (5, 6, 7, 8, 9, 10):
        census = censuses[f"A{n}"]
        for p in (2, 3, 5, 7):
            if p > n:
                continue
            assert alternating_prime_order_count(n, p).value == census.count(p), (n, p)


def test_alternating_count_domain():
    assert alternating_prime_order_count(4, 2).value == 3  # double transpositions
    with pytest.raises(ParameterDomainError):
        alternating_prime_order_count(8, 6)  # 6 is not prime
    with pytest.raises(ParameterDomainError):
        alternating_prime_order_count(5, 7)  # no 7-cycles fit in Alt(5)


@pytest.mark.parametrize(
    "token, p, normalizer",
    [
        ("A8", 7, 21),
        ("A10", 7, 126),
        ("M11", 11, 55),
        ("M12", 11, 55),
        ("J2", 7, 42),
        ("L3(4)", 7, 21),
    ],
)
def test_sylow_normalizer_from_census(token, p, normalizer, censuses):
    census = censuses[token]
    got = sylow_normalizer_order(census.group_order, p, census.count(p))
    assert got.value == normalizer


def test_sylow_normalizer_rejects_bad_inputs():
    order = FactoredInteger.from_int(20160)
    with pytest.raises(ParameterDomainError):
        sylow_normalizer_order(order, 2, 315)  # 2^6 divides the order
    with pytest.raises(ConsistencyError):
        sylow_normalizer_order(order, 7, 6 * 961)  # n_p = 961 != 1 mod 7


def test_derive_invariants(censuses):
    record = derive_invariants(censuses["A5"])
    assert record.npe == frozenset({15, 20, 24})
    assert record.npe_multiset == (15, 20, 24)
    m11 = derive_invariants(censuses["M11"])
    assert m11.npe == frozenset({165, 440, 1440, 1584})
    j2 = derive_invariants(censuses["J2"])
    assert j2.npe == frozenset({2835, 17360, 28224, 86400})
    m12 = derive_invariants(censuses["M12"])
    assert m12.npe == frozenset({891, 4400, 9504, 17280})
