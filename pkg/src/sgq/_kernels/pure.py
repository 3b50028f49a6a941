"""Reference implementations of the permutation kernels.

This lane defines the exact semantics (composition convention, RNG stream,
replacement schedule) that the compiled lane reproduces bit for bit.
Permutations are numpy arrays of images: p maps i to p[i], and composition
(a * b)[i] = a[b[i]] applies b first. Generator sets arrive as a single
2D C-contiguous array of dtype uint8 (degree <= 256) or uint16.

The RNG is splitmix64; bounded draws take the top 31 bits modulo n, which
is unbiased enough for the tiny moduli used here and trivially portable.
"""

from __future__ import annotations

import math

import numpy as np

LANE = "pure"

_M64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit stream; identical across lanes."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def bounded(self, n: int) -> int:
        return (self.next_u64() >> 33) % n


def derive_stream_seed(seed: int, stream: int) -> int:
    """Seed for an auxiliary stream (thread lanes); stream 0 is the base seed."""
    if stream == 0:
        return seed & _M64
    return SplitMix64((seed ^ (0xA5A5A5A5A5A5A5A5 * stream)) & _M64).next_u64()


def perm_order(perm) -> int:
    """Multiplicative order of a permutation (lcm of cycle lengths)."""
    n = len(perm)
    seen = bytearray(n)
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = int(perm[j])
            length += 1
        out = math.lcm(out, length)
    return out


def census_counts(gens: np.ndarray, cap: int) -> dict[int, int] | None:
    """Breadth-first closure of <gens> with per-element order counts.

    Returns {order: count} over the whole group, or None if the closure
    exceeds cap elements. gens has shape (ngens, degree).
    """
    ngens, degree = gens.shape
    identity = np.arange(degree, dtype=gens.dtype)
    seen = {identity.tobytes()}
    queue = [identity]
    counts: dict[int, int] = {1: 1}
    head = 0
    while head < len(queue):
        current = queue[head]
        head += 1
        for k in range(ngens):
            image = gens[k][current]
            key = image.tobytes()
            if key in seen:
                continue
            if len(seen) >= cap:
                return None
            seen.add(key)
            queue.append(image)
            o = perm_order(image)
            counts[o] = counts.get(o, 0) + 1
    return counts


def pr_order_histogram(
    gens: np.ndarray, n_samples: int, seed: int, slots: int = 10, burnin: int = 100
) -> dict[int, int]:
    """Order histogram of n_samples product-replacement draws.

    Slots are seeded by cycling the generators; each step composes one slot
    into another (side chosen by one RNG bit) and folds it into a separate
    accumulator whose order is what gets sampled.
    """
    ngens, degree = gens.shape
    rng = SplitMix64(seed)
    table = [gens[i % ngens].copy() for i in range(slots)]
    acc = np.arange(degree, dtype=gens.dtype)

    def step():
        nonlocal acc
        i = rng.bounded(slots)
        j = (i + 1 + rng.bounded(slots - 1)) % slots
        if rng.next_u64() & 1:
            table[i] = table[i][table[j]]
        else:
            table[i] = table[j][table[i]]
        acc = acc[table[i]]

    for _ in range(burnin):
        step()
    hist: dict[int, int] = {}
    for _ in range(n_samples):
        step()
        o = perm_order(acc)
        hist[o] = hist.get(o, 0) + 1
    return hist
