"""Permutation realizations of catalog groups.

A GroupRealization bundles 0-based generator image arrays with the degree
and the expected group order from the closed-form catalog. Sources:

- alternating groups: a 3-cycle plus a long cycle (full cycle for odd n,
  an (n-1)-cycle fixing the first point for even n);
- classical groups: transvection/reflection generating sets acting on
  projective points (linear, symplectic, unitary, odd-dimensional
  orthogonal over odd fields);
- vendored generator files for the three sporadic groups that the test
  suite censuses (M11, M12, J2).

Generator files are plain text: optional '#' comment lines, a header line
'degree N', then one generator per line as N space-separated 1-based
images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..catalog import (
    Alternating,
    Classical,
    GroupDescriptor,
    Sporadic,
    canonicalize_descriptor,
    descriptor_text,
    order_of_descriptor,
)
from ..datadir import data_file
from ..errors import GeneratorFileError, UnknownGroupError
from ..factored import FactoredInteger
from . import matrices
from .bsgs import StabilizerChain


def _dtype_for(degree: int):
    return np.uint8 if degree <= 256 else np.uint16


@dataclass
class GroupRealization:
    """A finite permutation group with its expected order."""

    degree: int
    generators: list[np.ndarray]
    label: str
    expected_order: FactoredInteger | None = None
    _chain: StabilizerChain | None = field(default=None, repr=False, compare=False)

    def generator_matrix(self) -> np.ndarray:
        """All generators stacked as one C-contiguous (ngens, degree) array."""
        return np.ascontiguousarray(np.vstack(self.generators))

    def verified_order(self) -> FactoredInteger:
        """Exact order by deterministic Schreier-Sims (cached)."""
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain.order()


def alternating_realization(n: int) -> GroupRealization:
    """Standard two-generator realization of Alt(n), n >= 3.

    >>> r = alternating_realization(5)
    >>> [g.tolist() for g in r.generators]
    [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]]
    """
    if n < 3:
        raise UnknownGroupError(f"alternating realization needs n >= 3, got {n}")
    dtype = _dtype_for(n)
    three = np.arange(n, dtype=dtype)
    three[[0, 1, 2]] = [1, 2, 0]
    if n % 2:
        cycle = np.roll(np.arange(n, dtype=dtype), -1)
    else:
        cycle = np.arange(n, dtype=dtype)
        cycle[1:] = np.roll(cycle[1:], -1)
    gens = [three] if n == 3 else [three, cycle]
    expected = order_of_descriptor(Alternating(n)) if n >= 5 else None
    return GroupRealization(n, gens, f"A{n}", expected)


def parse_generator_text(text: str, source: str = "<string>") -> tuple[int, list[np.ndarray]]:
    degree = None
    gens: list[np.ndarray] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise GeneratorFileError(
                    f"{source}:{lineno}: expected header 'degree N', got {raw.strip()!r}"
                )
            degree = int(parts[1])
            if degree < 1:
                raise GeneratorFileError(f"{source}:{lineno}: degree must be positive")
            continue
        fields = line.split()
        if len(fields) != degree:
            raise GeneratorFileError(
                f"{source}:{lineno}: expected {degree} images, got {len(fields)}"
            )
        try:
            images = [int(f) for f in fields]
        except ValueError as exc:
            raise GeneratorFileError(f"{source}:{lineno}: non-integer image: {exc}") from exc
        if sorted(images) != list(range(1, degree + 1)):
            raise GeneratorFileError(
                f"{source}:{lineno}: images are not a permutation of 1..{degree}"
            )
        gens.append(np.array([x - 1 for x in images], dtype=_dtype_for(degree)))
    if degree is None:
        raise GeneratorFileError(f"{source}: missing 'degree N' header")
    if not gens:
        raise GeneratorFileError(f"{source}: no generators")
    return degree, gens


def load_generator_file(path: str | Path) -> tuple[int, list[np.ndarray]]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GeneratorFileError(f"cannot read generator file {path}: {exc}") from exc
    return parse_generator_text(text, source=str(path))


_VENDORED = {"M11": "m11.gens", "M12": "m12.gens", "J2": "j2.gens"}

_REALIZED_NOTE = (
    "realizations cover alternating groups, linear/symplectic/unitary "
    "classical groups of small field size, odd-dimensional orthogonal "
    "groups over odd fields, and the vendored sporadic sets M11, M12, J2"
)


def realization_for(descriptor: GroupDescriptor) -> GroupRealization:
    """Faithful permutation realization of a catalog group.

    Classical groups act on projective points, so the realized group is the
    simple projective quotient matching the catalog order exactly.
    """
    descriptor = canonicalize_descriptor(descriptor)
    label = descriptor_text(descriptor)
    expected = order_of_descriptor(descriptor)

    if isinstance(descriptor, Alternating):
        return alternating_realization(descriptor.n)

    if isinstance(descriptor, Sporadic):
        fname = _VENDORED.get(descriptor.name)
        if fname is None:
            raise UnknownGroupError(
                f"no vendored permutation generators for {label}; {_REALIZED_NOTE}"
            )
        degree, gens = load_generator_file(data_file(fname))
        return GroupRealization(degree, gens, label, expected)

    if isinstance(descriptor, Classical):
        series, rank, q = descriptor.series, descriptor.rank, descriptor.q
        if series == "A":
            F, mats = matrices.special_linear_generators(rank + 1, q)
        elif series == "C":
            F, mats = matrices.symplectic_generators(2 * rank, q)
        elif series == "2A":
            F, mats = matrices.special_unitary_generators(rank + 1, q)
        elif series == "B":
            F, mats = matrices.omega_odd_generators(2 * rank + 1, q)
        else:
            raise UnknownGroupError(f"no realization strategy for {label}; {_REALIZED_NOTE}")
        degree, perms = matrices.projective_permutations(F, mats)
        return GroupRealization(degree, perms, label, expected)

    raise UnknownGroupError(f"no realization strategy for {label}; {_REALIZED_NOTE}")
