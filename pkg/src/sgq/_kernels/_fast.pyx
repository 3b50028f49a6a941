# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled lane of the permutation kernels.

Mirrors sgq._kernels.pure exactly: same composition convention, same
splitmix64 stream, same replacement schedule, same cap semantics. The BFS
census stores elements in a growing flat buffer that doubles as the queue,
with an open-addressing hash table of element indices; degrees up to 16
use a nibble-packed 64-bit representation instead.
"""

import numpy as np

from libc.stdint cimport uint8_t, uint16_t, uint64_t, int64_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

LANE = "compiled"

ctypedef fused perm_t:
    uint8_t
    uint16_t

cdef uint64_t _EMPTY64 = 0xFFFFFFFFFFFFFFFFULL
cdef int64_t _EMPTYIDX = -1

cdef enum:
    MAX_ORDER_SMALL = 8192


# ── RNG: splitmix64, bit-identical to the pure lane ─────────────────────────

cdef struct Rng:
    uint64_t state

cdef inline uint64_t _rng_next(Rng *r) nogil:
    r.state += 0x9E3779B97F4A7C15ULL
    cdef uint64_t z = r.state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)

cdef inline uint64_t _rng_bounded(Rng *r, uint64_t n) nogil:
    return (_rng_next(r) >> 33) % n


# ── helpers ─────────────────────────────────────────────────────────────────

cdef inline uint64_t _gcd64(uint64_t a, uint64_t b) nogil:
    cdef uint64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a

cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef int _perm_order_buf(perm_t *p, Py_ssize_t n, uint8_t *seen, uint64_t *out) nogil:
    """Order of p into *out; returns 0, or -1 on (unreachable) overflow."""
    cdef Py_ssize_t start, j
    cdef uint64_t length, acc = 1, g
    for j in range(n):
        seen[j] = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = <Py_ssize_t> p[j]
            length += 1
        g = _gcd64(acc, length)
        if acc // g > 1152921504606846976ULL / length:
            return -1
        acc = (acc // g) * length
    out[0] = acc
    return 0


def perm_order(object perm):
    """Multiplicative order of a permutation image array."""
    arr = np.ascontiguousarray(perm)
    if arr.dtype == np.uint8:
        return _perm_order_py[uint8_t](arr)
    if arr.dtype == np.uint16:
        return _perm_order_py[uint16_t](arr)
    raise TypeError("permutation array must be uint8 or uint16")


cdef object _perm_order_py(perm_t[::1] p):
    cdef Py_ssize_t n = p.shape[0]
    cdef uint8_t *seen = <uint8_t *> malloc(n)
    cdef uint64_t out = 0
    if seen == NULL:
        raise MemoryError()
    try:
        if _perm_order_buf(&p[0], n, seen, &out) != 0:
            raise OverflowError("element order exceeds the 64-bit kernel bound")
        return out
    finally:
        free(seen)


# ── census: nibble-packed path for degree <= 16 ─────────────────────────────

cdef inline uint64_t _pack_compose(uint64_t gen, uint64_t cur, Py_ssize_t n) nogil:
    # out[i] = gen[cur[i]], nibble-encoded
    cdef uint64_t out = 0
    cdef Py_ssize_t i
    cdef uint64_t img
    for i in range(n):
        img = (cur >> (4 * i)) & 15
        out |= ((gen >> (4 * img)) & 15) << (4 * i)
    return out


cdef int _grow_packed(uint64_t **slots_io, Py_ssize_t *nslots_io,
                      uint64_t *elems, int64_t n_elems) except -1:
    cdef Py_ssize_t new_n = nslots_io[0] * 2
    cdef uint64_t new_mask = new_n - 1
    cdef uint64_t *new_slots = <uint64_t *> malloc(new_n * sizeof(uint64_t))
    cdef Py_ssize_t i
    cdef int64_t e
    cdef uint64_t h
    if new_slots == NULL:
        raise MemoryError()
    for i in range(new_n):
        new_slots[i] = _EMPTY64
    for e in range(n_elems):
        h = _mix64(elems[e]) & new_mask
        while new_slots[h] != _EMPTY64:
            h = (h + 1) & new_mask
        new_slots[h] = elems[e]
    free(slots_io[0])
    slots_io[0] = new_slots
    nslots_io[0] = new_n
    return 0


cdef _census_packed(uint64_t *gens, Py_ssize_t ngens, Py_ssize_t degree, int64_t cap):
    cdef Py_ssize_t nslots = 1 << 14
    cdef uint64_t mask = nslots - 1
    cdef uint64_t *slots = <uint64_t *> malloc(nslots * sizeof(uint64_t))
    cdef Py_ssize_t cap_elems = 1 << 12
    cdef uint64_t *elems = NULL
    cdef uint64_t *tmp = NULL
    cdef int64_t n_elems = 0
    cdef int64_t head = 0
    cdef int64_t counts_small[MAX_ORDER_SMALL]
    cdef Py_ssize_t i, k
    cdef int64_t t
    cdef uint64_t identity = 0, cur, img, h
    cdef uint8_t unpacked[16]
    cdef uint8_t seen[16]
    cdef uint64_t order_val = 0
    cdef dict big_orders = {}

    if slots == NULL:
        raise MemoryError()
    elems = <uint64_t *> malloc(cap_elems * sizeof(uint64_t))
    if elems == NULL:
        free(slots)
        raise MemoryError()
    for i in range(nslots):
        slots[i] = _EMPTY64
    for t in range(MAX_ORDER_SMALL):
        counts_small[t] = 0

    for i in range(degree):
        identity |= (<uint64_t> i) << (4 * i)

    try:
        h = _mix64(identity) & mask
        slots[h] = identity
        elems[0] = identity
        n_elems = 1
        counts_small[1] = 1

        while head < n_elems:
            cur = elems[head]
            head += 1
            for k in range(ngens):
                img = _pack_compose(gens[k], cur, degree)
                h = _mix64(img) & mask
                while slots[h] != _EMPTY64 and slots[h] != img:
                    h = (h + 1) & mask
                if slots[h] == img:
                    continue
                if n_elems >= cap:
                    return None
                slots[h] = img
                if n_elems == cap_elems:
                    cap_elems *= 2
                    tmp = <uint64_t *> realloc(elems, cap_elems * sizeof(uint64_t))
                    if tmp == NULL:
                        raise MemoryError()
                    elems = tmp
                elems[n_elems] = img
                n_elems += 1
                for i in range(degree):
                    unpacked[i] = <uint8_t> ((img >> (4 * i)) & 15)
                _perm_order_buf[uint8_t](unpacked, degree, seen, &order_val)
                if order_val < MAX_ORDER_SMALL:
                    counts_small[<Py_ssize_t> order_val] += 1
                else:
                    big_orders[order_val] = big_orders.get(order_val, 0) + 1
                if n_elems * 5 >= nslots * 3:
                    _grow_packed(&slots, &nslots, elems, n_elems)
                    mask = nslots - 1

        out = {}
        for t in range(MAX_ORDER_SMALL):
            if counts_small[t]:
                out[t] = counts_small[t]
        out.update(big_orders)
        return out
    finally:
        free(slots)
        free(elems)


# ── census: general path (flat element buffer + index hash table) ───────────

cdef inline uint64_t _hash_elem(perm_t *e, Py_ssize_t n) nogil:
    cdef uint64_t h = 14695981039346656037ULL
    cdef Py_ssize_t i
    for i in range(n):
        h ^= <uint64_t> e[i]
        h *= 1099511628211ULL
    return h

cdef inline bint _eq_elem(perm_t *a, perm_t *b, Py_ssize_t n) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        if a[i] != b[i]:
            return 0
    return 1


cdef int _grow_general(int64_t **slots_io, Py_ssize_t *nslots_io,
                       perm_t *elems, int64_t n_elems, Py_ssize_t degree) except -1:
    cdef Py_ssize_t new_n = nslots_io[0] * 2
    cdef uint64_t new_mask = new_n - 1
    cdef int64_t *new_slots = <int64_t *> malloc(new_n * sizeof(int64_t))
    cdef Py_ssize_t i
    cdef int64_t e
    cdef uint64_t h
    if new_slots == NULL:
        raise MemoryError()
    for i in range(new_n):
        new_slots[i] = _EMPTYIDX
    for e in range(n_elems):
        h = _hash_elem(elems + e * degree, degree) & new_mask
        while new_slots[h] != _EMPTYIDX:
            h = (h + 1) & new_mask
        new_slots[h] = e
    free(slots_io[0])
    slots_io[0] = new_slots
    nslots_io[0] = new_n
    return 0


cdef _census_general(perm_t[:, ::1] gens, int64_t cap):
    cdef Py_ssize_t ngens = gens.shape[0]
    cdef Py_ssize_t degree = gens.shape[1]
    cdef Py_ssize_t nslots = 1 << 14
    cdef uint64_t mask = nslots - 1
    cdef int64_t *slots = <int64_t *> malloc(nslots * sizeof(int64_t))
    cdef Py_ssize_t cap_elems = 1 << 12
    cdef perm_t *elems = <perm_t *> malloc(cap_elems * degree * sizeof(perm_t))
    cdef perm_t *tmp = NULL
    cdef perm_t *scratch = <perm_t *> malloc(degree * sizeof(perm_t))
    cdef uint8_t *seen = <uint8_t *> malloc(degree)
    cdef int64_t counts_small[MAX_ORDER_SMALL]
    cdef dict big_orders = {}
    cdef int64_t n_elems = 0, head = 0
    cdef Py_ssize_t i, k
    cdef int64_t t, idx
    cdef uint64_t h, order_val = 0
    cdef perm_t *cur
    cdef perm_t *g

    if slots == NULL or elems == NULL or scratch == NULL or seen == NULL:
        free(slots); free(elems); free(scratch); free(seen)
        raise MemoryError()
    for i in range(nslots):
        slots[i] = _EMPTYIDX
    for t in range(MAX_ORDER_SMALL):
        counts_small[t] = 0

    try:
        for i in range(degree):
            elems[i] = <perm_t> i
        h = _hash_elem(elems, degree) & mask
        slots[h] = 0
        n_elems = 1
        counts_small[1] = 1

        while head < n_elems:
            cur = elems + head * degree
            head += 1
            for k in range(ngens):
                g = &gens[k, 0]
                for i in range(degree):
                    scratch[i] = g[cur[i]]
                h = _hash_elem(scratch, degree) & mask
                idx = slots[h]
                while idx != _EMPTYIDX and not _eq_elem(elems + idx * degree, scratch, degree):
                    h = (h + 1) & mask
                    idx = slots[h]
                if idx != _EMPTYIDX:
                    continue
                if n_elems >= cap:
                    return None
                if n_elems == cap_elems:
                    cap_elems *= 2
                    tmp = <perm_t *> realloc(elems, cap_elems * degree * sizeof(perm_t))
                    if tmp == NULL:
                        raise MemoryError()
                    elems = tmp
                    cur = elems + (head - 1) * degree
                slots[h] = n_elems
                memcpy(elems + n_elems * degree, scratch, degree * sizeof(perm_t))
                n_elems += 1
                if _perm_order_buf(scratch, degree, seen, &order_val) != 0:
                    raise OverflowError("element order exceeds the 64-bit kernel bound")
                if order_val < MAX_ORDER_SMALL:
                    counts_small[<Py_ssize_t> order_val] += 1
                else:
                    big_orders[order_val] = big_orders.get(order_val, 0) + 1
                if n_elems * 5 >= nslots * 3:
                    _grow_general(&slots, &nslots, elems, n_elems, degree)
                    mask = nslots - 1

        out = {}
        for t in range(MAX_ORDER_SMALL):
            if counts_small[t]:
                out[t] = counts_small[t]
        out.update(big_orders)
        return out
    finally:
        free(slots)
        free(elems)
        free(scratch)
        free(seen)


def census_counts(object gens, cap):
    """BFS closure census; returns {order: count} or None past the cap."""
    arr = np.ascontiguousarray(gens)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise TypeError("generator matrix must be 2D with at least one row")
    cdef int64_t c = cap
    cdef Py_ssize_t degree = arr.shape[1]
    cdef Py_ssize_t ngens = arr.shape[0]
    cdef Py_ssize_t k, i
    cdef uint64_t packed
    cdef uint64_t *packed_gens
    if degree <= 16:
        arr8 = np.ascontiguousarray(arr, dtype=np.uint8)
        packed_gens = <uint64_t *> malloc(ngens * sizeof(uint64_t))
        if packed_gens == NULL:
            raise MemoryError()
        try:
            for k in range(ngens):
                packed = 0
                for i in range(degree):
                    packed |= (<uint64_t> arr8[k, i]) << (4 * i)
                packed_gens[k] = packed
            return _census_packed(packed_gens, ngens, degree, c)
        finally:
            free(packed_gens)
    if arr.dtype == np.uint8:
        return _census_general[uint8_t](arr, c)
    if arr.dtype == np.uint16:
        return _census_general[uint16_t](arr, c)
    raise TypeError("generator matrix must be uint8 or uint16")


# ── product replacement sampler ─────────────────────────────────────────────

cdef _pr_histogram(perm_t[:, ::1] gens, int64_t n_samples, uint64_t seed,
                   Py_ssize_t slots, int64_t burnin):
    cdef Py_ssize_t ngens = gens.shape[0]
    cdef Py_ssize_t degree = gens.shape[1]
    cdef perm_t *table = <perm_t *> malloc(slots * degree * sizeof(perm_t))
    cdef perm_t *acc = <perm_t *> malloc(degree * sizeof(perm_t))
    cdef perm_t *scratch = <perm_t *> malloc(degree * sizeof(perm_t))
    cdef uint8_t *seen = <uint8_t *> malloc(degree)
    cdef int64_t counts_small[MAX_ORDER_SMALL]
    cdef dict big_orders = {}
    cdef Rng rng
    cdef Py_ssize_t s, x
    cdef int64_t t, step_i
    cdef uint64_t i, j, order_val = 0
    cdef perm_t *ti
    cdef perm_t *tj

    if table == NULL or acc == NULL or scratch == NULL or seen == NULL:
        free(table); free(acc); free(scratch); free(seen)
        raise MemoryError()
    rng.state = seed
    for t in range(MAX_ORDER_SMALL):
        counts_small[t] = 0
    try:
        for s in range(slots):
            for x in range(degree):
                table[s * degree + x] = gens[s % ngens, x]
        for x in range(degree):
            acc[x] = <perm_t> x

        for step_i in range(burnin + n_samples):
            i = _rng_bounded(&rng, slots)
            j = (i + 1 + _rng_bounded(&rng, slots - 1)) % slots
            ti = table + i * degree
            tj = table + j * degree
            if _rng_next(&rng) & 1:
                for x in range(degree):
                    scratch[x] = ti[tj[x]]
            else:
                for x in range(degree):
                    scratch[x] = tj[ti[x]]
            memcpy(ti, scratch, degree * sizeof(perm_t))
            for x in range(degree):
                scratch[x] = acc[ti[x]]
            memcpy(acc, scratch, degree * sizeof(perm_t))
            if step_i >= burnin:
                if _perm_order_buf(acc, degree, seen, &order_val) != 0:
                    raise OverflowError("element order exceeds the 64-bit kernel bound")
                if order_val < MAX_ORDER_SMALL:
                    counts_small[<Py_ssize_t> order_val] += 1
                else:
                    big_orders[order_val] = big_orders.get(order_val, 0) + 1

        out = {}
        for t in range(MAX_ORDER_SMALL):
            if counts_small[t]:
                out[t] = counts_small[t]
        out.update(big_orders)
        return out
    finally:
        free(table)
        free(acc)
        free(scratch)
        free(seen)


def pr_order_histogram(object gens, n_samples, seed, slots=10, burnin=100):
    """Order histogram of a product-replacement walk; matches the pure lane."""
    arr = np.ascontiguousarray(gens)
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise TypeError("generator matrix must be 2D with at least one row")
    if arr.dtype == np.uint8:
        return _pr_histogram[uint8_t](arr, n_samples, seed, slots, burnin)
    if arr.dtype == np.uint16:
        return _pr_histogram[uint16_t](arr, n_samples, seed, slots, burnin)
    raise TypeError("generator matrix must be uint8 or uint16")
