"""Element-order censuses and the invariants derived from them.

An ElementOrderCensus maps element order k to the exact number of elements
of order k. Complete censuses come from breadth-first closure of a
permutation realization (bounded by an element cap); closed forms cover
cyclic groups, direct products, and order-p counts in alternating groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from . import _kernels
from .catalog import GroupDescriptor, descriptor_text, order_of_descriptor
from .errors import CensusCapError, ConsistencyError, ParameterDomainError
from .factored import FactoredInteger, factor_integer, is_prime, totient_of_prime_power
from .realize.realization import GroupRealization, realization_for

DEFAULT_CAP = 1 << 21
MAX_CAP = 1 << 24


@dataclass(frozen=True)
class ElementOrderCensus:
    """Exact element-order counts for a finite group.

    counts[k] is the number of elements of order exactly k; a complete
    census covers the whole group, so the counts sum to the group order.
    """

    counts: dict[int, int]
    group_order: FactoredInteger
    complete: bool = True
    label: str = ""

    def __post_init__(self):
        if self.counts.get(1) != 1:
            raise ConsistencyError(f"census must count exactly one identity, got {self.counts.get(1)}")
        if any(k < 1 or c < 1 for k, c in self.counts.items()):
            raise ConsistencyError("census orders and counts must be positive")
        if self.complete and self.total() != self.group_order.value:
            raise ConsistencyError(
                f"complete census sums to {self.total()}, group order is {self.group_order.value}"
            )

    def total(self) -> int:
        return sum(self.counts.values())

    def element_orders(self) -> frozenset[int]:
        """The set of element orders (the spectrum)."""
        return frozenset(self.counts)

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)

    def prime_order_counts(self) -> dict[int, int]:
        """count of order-p elements for each prime p dividing the group order."""
        return {p: self.counts.get(p, 0) for p in self.group_order.primes}


def census_from_realization(
    realization: GroupRealization, cap: int = DEFAULT_CAP, threads: int = 1
) -> ElementOrderCensus:
    """Complete census by breadth-first closure over the generators.

    `threads` is accepted for interface symmetry with sampling; the closure
    is a deterministic set computation, so the result never depends on it.
    """
    if not 1 <= cap <= MAX_CAP:
        raise ParameterDomainError(f"cap must be in [1, {MAX_CAP}], got {cap}")
    if threads < 1:
        raise ParameterDomainError(f"threads must be positive, got {threads}")
    if realization.expected_order is not None and realization.expected_order.value > cap:
        raise CensusCapError(
            f"{realization.label}: group order {realization.expected_order.value} exceeds cap {cap}"
        )
    counts = _kernels.census_counts(realization.generator_matrix(), cap)
    if counts is None:
        raise CensusCapError(f"{realization.label}: closure exceeded cap {cap}")
    order = realization.expected_order
    if order is None:
        order = FactoredInteger.from_int(sum(counts.values()))
    return ElementOrderCensus(counts, order, complete=True, label=realization.label)


def census_of(
    descriptor: GroupDescriptor, cap: int = DEFAULT_CAP, threads: int = 1
) -> ElementOrderCensus:
    """Complete census of a catalog group via its standard realization."""
    order = order_of_descriptor(descriptor)
    if order.value > cap:
        raise CensusCapError(
            f"{descriptor_text(descriptor)}: group order {order.value} exceeds cap {cap}"
        )
    return census_from_realization(realization_for(descriptor), cap, threads=threads)


def cyclic_census(n: int) -> ElementOrderCensus:
    """Census of the cyclic group of order n: phi(d) elements of order d | n.

    >>> cyclic_census(12).counts == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}
    True
    """
    if n < 1:
        raise ParameterDomainError(f"cyclic group order must be positive, got {n}")
    order = FactoredInteger.from_int(n)
    divisors = [1]
    for p, e in order.factors.items():
        divisors = [d * p**i for d in divisors for i in range(e + 1)]
    counts = {}
    for d in sorted(divisors):
        phi = 1
        for p, e in factor_integer(d).items():
            phi *= totient_of_prime_power(p, e).value
        counts[d] = phi
    return ElementOrderCensus(counts, order, complete=True, label=f"Z{n}")


def direct_product_census(a: ElementOrderCensus, b: ElementOrderCensus) -> ElementOrderCensus:
    """Census of A x B: order of (x, y) is lcm(|x|, |y|)."""
    if not (a.complete and b.complete):
        raise ParameterDomainError("direct product census needs complete factor censuses")
    counts: dict[int, int] = {}
    for ka, ca in a.counts.items():
        for kb, cb in b.counts.items():
            k = math.lcm(ka, kb)
            counts[k] = counts.get(k, 0) + ca * cb
    label = f"{a.label}x{b.label}" if a.label and b.label else ""
    return ElementOrderCensus(counts, a.group_order * b.group_order, complete=True, label=label)


def alternating_prime_order_count(n: int, p: int) -> FactoredInteger:
    """Exact number of order-p elements in Alt(n), by cycle-type counting.

    Elements of order p are products of k disjoint p-cycles, counted by
    n!/(k! * p^k * (n-kp)!); for p = 2 only even k lands in Alt(n).

    >>> alternating_prime_order_count(8, 7).value
    5760
    >>> alternating_prime_order_count(10, 7).value
    86400
    >>> alternating_prime_order_count(8, 2).value
    315
    """
    if not is_prime(p):
        raise ParameterDomainError(f"p must be prime, got {p}")
    if n < 1:
        raise ParameterDomainError(f"n must be positive, got {n}")
    total = 0
    fact_n = math.factorial(n)
    for k in range(1, n // p + 1):
        if p == 2 and k % 2:
            continue
        total += fact_n // (math.factorial(k) * p**k * math.factorial(n - k * p))
    if total == 0:
        raise ParameterDomainError(f"Alt({n}) has no elements of order {p}")
    return FactoredInteger.from_int(total)


def sylow_normalizer_order(
    order: FactoredInteger, p: int, count_p: FactoredInteger | int
) -> FactoredInteger:
    """Order of the Sylow p-normalizer from the order-p element count.

    Valid when p divides the group order exactly once and Sylow p-subgroups
    are self-centralizing (TI with cyclic normalizer quotient), so the
    count of order-p elements is (p-1) * n_p: then |N| = |G| (p-1) / count.
    The Sylow congruence n_p = 1 (mod p) is checked and a violation raises
    ConsistencyError, which flags inputs outside the valid regime.
    """
    if order.exponent(p) != 1:
        raise ParameterDomainError(
            f"normalizer derivation needs p to divide the order exactly once; "
            f"{p} has exponent {order.exponent(p)}"
        )
    count = count_p if isinstance(count_p, FactoredInteger) else FactoredInteger.from_int(count_p)
    pm1 = FactoredInteger.from_int(p - 1)
    n_p = count.divide_exact(pm1)
    if n_p.value % p != 1:
        raise ConsistencyError(
            f"Sylow count {n_p.value} violates the congruence 1 mod {p}; "
            f"the order-{p} count {count.value} cannot come from a self-centralizing Sylow subgroup"
        )
    normalizer = order.divide_exact(n_p)
    return normalizer


@dataclass(frozen=True)
class InvariantRecord:
    """The quantitative invariants read off one complete census."""

    label: str
    order: FactoredInteger
    prime_divisors: frozenset[int]
    spectrum: frozenset[int]
    prime_counts: dict[int, int] = dc_field(compare=False)
    involution_count: int = 0
    largest_prime: int = 0
    largest_prime_count: int = 0

    @property
    def npe(self) -> frozenset[int]:
        """The set of order-p element counts over primes p (deduplicated)."""
        return frozenset(self.prime_counts.values())

    @property
    def npe_multiset(self) -> tuple[int, ...]:
        """Order-p counts as a sorted tuple, one entry per prime divisor."""
        return tuple(sorted(self.prime_counts.values()))


def derive_invariants(census: ElementOrderCensus) -> InvariantRecord:
    if not census.complete:
        raise ParameterDomainError("invariants need a complete census")
    primes = census.group_order.primes
    spectrum = census.element_orders()
    for p in primes:
        if p not in spectrum:
            raise ConsistencyError(
                f"census spectrum is missing prime {p} dividing the group order"
            )
    prime_counts = {p: census.counts[p] for p in primes}
    p_star = census.group_order.largest_prime()
    return InvariantRecord(
        label=census.label,
        order=census.group_order,
        prime_divisors=frozenset(primes),
        spectrum=spectrum,
        prime_counts=prime_counts,
        involution_count=census.counts.get(2, 0),
        largest_prime=p_star,
        largest_prime_count=census.counts[p_star],
    )
