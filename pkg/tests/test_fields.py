"""Finite field tables: axioms, Frobenius, and encoding stability."""

from __future__ import annotations

import itertools

import pytest

from sgq.errors import ParameterDomainError
from sgq.realize.field import FiniteField, get_field

SMALL_Q = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = get_field(q)
    elems = range(q)
    for a in elems:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.mul(a, 0) == 0
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    for a, b in itertools.product(elems, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(a, b) == F.add(a, F.neg(b))
    # associativity and distributivity on a grid, full product is O(q^3)
    probe = list(elems)[: min(q, 9)]
    for a, b, c in itertools.product(probe, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", SMALL_Q)
def test_multiplicative_group_cyclic(q):
    F = get_field(q)
    orders = []
    for a in range(1, q):
        k, x = 1, a
        while x != 1:
            x = F.mul(x, a)
            k += 1
        assert (q - 1) % k == 0
        orders.append(k)
    assert max(orders) == q - 1  # a generator exists


@pytest.mark.parametrize("q", (4, 8, 9, 16, 25, 27, 49))
def test_frobenius_is_p_power(q):
    F = get_field(q)
    for a in range(q):
        assert F.frobenius(a) == F.pow(a, F.p)
        assert F.frobenius(a, F.k) == a  # full Frobenius orbit closes


@pytest.mark.parametrize("q", (4, 9, 16, 25, 49))
def test_quadratic_conjugation_is_involution(q):
    F = get_field(q)
    half = F.k // 2
    fixed = [a for a in range(q) if F.frobenius(a, half) == a]
    for a in range(q):
        assert F.frobenius(F.frobenius(a, half), half) == a
    assert len(fixed) == F.p ** half  # fixed field is GF(sqrt(q))


def test_frobenius_additive_multiplicative():
    F = get_field(9)
    for a in range(9):
        for b in range(9):
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
            assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_zero_trace_elements():
    F = get_field(9)
    zt = F.elements_with_zero_trace_to(1)
    assert 0 in zt
    assert len(zt) == 3  # kernel of the trace map GF(9) -> GF(3)
    for a in zt:
        assert F.add(a, F.frobenius(a)) == 0
    with pytest.raises(ParameterDomainError):
        get_field(8).elements_with_zero_trace_to(2)


def test_prime_field_is_mod_p():
    F = get_field(7)
    for a in range(7):
        for b in range(7):
            assert F.add(a, b) == (a + b) % 7
            assert F.mul(a, b) == (a * b) % 7


def test_characteristic():
    for q, p in ((8, 2), (9, 3), (25, 5), (49, 7)):
        F = get_field(q)
        assert F.p == p
        for a in range(q):
            x = 0
            for _ in range(p):
                x = F.add(x, a)
            assert x == 0


def test_pow():
    F = get_field(8)
    for a in range(1, 8):
        assert F.pow(a, 0) == 1
        assert F.pow(a, 7) == 1  # Fermat in GF(8)
        acc = 1
        for e in range(1, 5):
            acc = F.mul(acc, a)
            assert F.pow(a, e) == acc


def test_modulus_is_deterministic():
    # same q must always pick the same irreducible polynomial
    assert FiniteField(9).poly == FiniteField(9).poly
    assert get_field(16) is get_field(16)  # cached
    assert FiniteField(4).poly == (1, 1, 1)  # x^2 + x + 1 is minimal


def test_rejects_non_prime_power():
    for q in (1, 6, 12, 100):
        with pytest.raises(ParameterDomainError):
            get_field(q)
