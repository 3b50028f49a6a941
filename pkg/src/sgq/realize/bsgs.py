"""Deterministic base-and-strong-generating-set order computation.

Straight Schreier-Sims with explicit transversals, on numpy image arrays.
No randomization: the result is exact, and the order comes back as a
FactoredInteger (product of factored orbit sizes). Suitable for the
moderate degrees used here (up to a few thousand points).

Invariant: every generator stored at level j fixes the base points of all
shallower levels, so the stabilizer at level l is generated by the union
of the generator lists at levels >= l. Verification walks levels bottom-up,
sifting Schreier generators and restarting deeper whenever a residue
survives. Each level records, per generator, how many orbit points have
been cleanly checked; appending generators below never invalidates a clean
check, so re-entry only processes new (point, generator) pairs.
"""

from __future__ import annotations

import numpy as np

from ..errors import ParameterDomainError
from ..factored import FactoredInteger


def _inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


class _Level:
    __slots__ = ("point", "gens", "orbit", "transversal", "checked")

    def __init__(self, point: int, degree: int, dtype):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.transversal: dict[int, np.ndarray] = {point: np.arange(degree, dtype=dtype)}
        self.checked: dict[int, int] = {}  # id(gen) -> orbit points verified

    def extend_orbit(self, gens: list[np.ndarray]) -> None:
        head = 0
        while head < len(self.orbit):
            pt = self.orbit[head]
            head += 1
            u = self.transversal[pt]
            for g in gens:
                img = int(g[pt])
                if img not in self.transversal:
                    self.transversal[img] = g[u]
                    self.orbit.append(img)


class StabilizerChain:
    """Stabilizer chain built by deterministic Schreier-Sims."""

    def __init__(self, generators: list[np.ndarray], degree: int):
        if not generators:
            raise ParameterDomainError("need at least one generator")
        self.degree = degree
        self.dtype = np.asarray(generators[0]).dtype
        self.levels: list[_Level] = []
        identity = np.arange(degree, dtype=self.dtype)
        initial = []
        for g in generators:
            g = np.asarray(g, dtype=self.dtype)
            if len(g) != degree:
                raise ParameterDomainError("generator degree mismatch")
            if not np.array_equal(np.sort(g), identity):
                raise ParameterDomainError("generator is not a permutation")
            if not np.array_equal(g, identity):
                initial.append(g)
        if initial:
            first = _Level(self._first_moved(initial[0]), degree, self.dtype)
            first.gens = initial
            self.levels.append(first)
            self._verify()

    def _first_moved(self, g: np.ndarray) -> int | None:
        moved = np.nonzero(g != np.arange(self.degree, dtype=g.dtype))[0]
        return int(moved[0]) if len(moved) else None

    def _gens_at(self, idx: int) -> list[np.ndarray]:
        out = []
        for lvl in self.levels[idx:]:
            out.extend(lvl.gens)
        return out

    def _strip(self, g: np.ndarray, start: int) -> tuple[np.ndarray, int]:
        for idx in range(start, len(self.levels)):
            lvl = self.levels[idx]
            img = int(g[lvl.point])
            if img not in lvl.transversal:
                return g, idx
            g = _inverse(lvl.transversal[img])[g]
        return g, len(self.levels)

    def _place_residue(self, residue: np.ndarray, created_from: int, at: int) -> None:
        """Install a surviving residue at level `at`, creating it if needed,
        and register it with every intermediate level it belongs to."""
        if at == len(self.levels):
            self.levels.append(_Level(self._first_moved(residue), self.degree, residue.dtype))
        for l in range(created_from + 1, at + 1):
            self.levels[l].gens.append(residue)

    def _verify(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            gens = self._gens_at(i)
            lvl.extend_orbit(gens)
            restart_at = None
            for g in gens:
                key = id(g)
                start = lvl.checked.get(key, 0)
                npts = len(lvl.orbit)
                for pi in range(start, npts):
                    pt = lvl.orbit[pi]
                    u = lvl.transversal[pt]
                    schreier = _inverse(lvl.transversal[int(g[pt])])[g[u]]
                    residue, j = self._strip(schreier, i + 1)
                    if self._first_moved(residue) is not None:
                        lvl.checked[key] = pi
                        self._place_residue(residue, i, j)
                        restart_at = j
                        break
                else:
                    lvl.checked[key] = npts
                if restart_at is not None:
                    break
            if restart_at is not None:
                i = restart_at
                continue
            i -= 1

    def order(self) -> FactoredInteger:
        out = FactoredInteger.one()
        for lvl in self.levels:
            out = out * FactoredInteger.from_int(len(lvl.orbit))
        return out

    def contains(self, g: np.ndarray) -> bool:
        residue, _ = self._strip(np.asarray(g, dtype=self.dtype), 0)
        return self._first_moved(residue) is None

    def base_points(self) -> list[int]:
        return [lvl.point for lvl in self.levels]


def group_order(generators: list[np.ndarray], degree: int) -> FactoredInteger:
    """Exact order of the permutation group generated by the given arrays.

    >>> import numpy as np
    >>> g1 = np.array([1, 2, 0, 3, 4], dtype=np.uint8)   # 3-cycle
    >>> g2 = np.array([1, 2, 3, 4, 0], dtype=np.uint8)   # 5-cycle
    >>> str(group_order([g1, g2], 5))
    '2^2*3*5'
    """
    return StabilizerChain(generators, degree).order()
