"""Prime graphs (Gruenberg-Kegel graphs) from element-order spectra.

Vertices are the primes dividing the group order; p and q are adjacent
when the group has an element of order divisible by p*q. Built either from
a complete census or from a bare spectrum plus the group order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import ElementOrderCensus
from .errors import ConsistencyError
from .factored import FactoredInteger


@dataclass(frozen=True)
class PrimeGraph:
    """Undirected graph on the prime divisors of a group order."""

    label: str
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # each edge as (smaller, larger)
    components: tuple[frozenset[int], ...]  # sorted by smallest member

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def is_isolated(self, p: int) -> bool:
        if p not in self.vertices:
            raise ConsistencyError(f"{p} is not a vertex of the prime graph")
        return not any(p in e for e in self.edges)

    def component_of(self, p: int) -> frozenset[int]:
        for comp in self.components:
            if p in comp:
                return comp
        raise ConsistencyError(f"{p} is not a vertex of the prime graph")

    def component_count(self) -> int:
        return len(self.components)

    def to_dot(self) -> str:
        """Deterministic GraphViz rendering (isolated vertices included)."""
        lines = ["graph primes {"]
        if self.label:
            lines.append(f'  label="{self.label}";')
        for v in self.vertices:
            lines.append(f"  p{v} [label=\"{v}\"];")
        for a, b in sorted(self.edges):
            lines.append(f"  p{a} -- p{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_from_spectrum(
    spectrum: frozenset[int] | set[int], order: FactoredInteger, label: str = ""
) -> PrimeGraph:
    """Prime graph from a full element-order spectrum and the group order.

    Adjacency is read directly off the spectrum: p ~ q iff some element
    order is divisible by p*q. Every prime dividing the order must occur
    as an element order (Cauchy), so a missing vertex means the spectrum
    is not the full spectrum of a group of that order.
    """
    primes = sorted(order.primes)
    for p in primes:
        if not any(m % p == 0 for m in spectrum):
            raise ConsistencyError(
                f"spectrum has no element order divisible by {p}, "
                f"which divides the group order"
            )
    edges = set()
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            if any(m % (p * q) == 0 for m in spectrum):
                edges.add((p, q))

    parent = {p: p for p in primes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, set[int]] = {}
    for p in primes:
        groups.setdefault(find(p), set()).add(p)
    components = tuple(sorted((frozenset(g) for g in groups.values()), key=min))
    return PrimeGraph(label, tuple(primes), frozenset(edges), components)


def graph_from_census(census: ElementOrderCensus) -> PrimeGraph:
    return graph_from_spectrum(census.element_orders(), census.group_order, census.label)
