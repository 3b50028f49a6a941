"""Matrix generating sets for classical groups and their projective actions.

Matrices are tuples of row tuples of field element codes, acting on column
vectors. The generating sets are built from transvections (linear,
symplectic, unitary) and reflection products (odd-dimensional orthogonal);
each construction is exercised against the closed-form group order by the
test suite, so a regression in any generating set is caught immediately.
"""

from __future__ import annotations

import numpy as np

from ..errors import ParameterDomainError
from .field import FiniteField, get_field

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(F: FiniteField, a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            s = 0
            for t in range(d):
                s = F.add(s, F.mul(a[i][t], b[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(F: FiniteField, m: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    d = len(m)
    return tuple(
        _dot(F, m[i], v) for i in range(d)
    )


def _dot(F: FiniteField, row, v) -> int:
    s = 0
    for a, b in zip(row, v):
        s = F.add(s, F.mul(a, b))
    return s


def special_linear_generators(d: int, q: int) -> tuple[FiniteField, list[Matrix]]:
    """Elementary transvections I + c*E_ij over a GF(p)-basis of GF(q).

    These generate SL(d, q) exactly (row reduction shows every determinant-1
    matrix is a product of elementary matrices).
    """
    if d < 2:
        raise ParameterDomainError(f"special linear construction needs dimension >= 2, got {d}")
    F = get_field(q)
    gens = []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for c in F.prime_subfield_basis():
                m = [list(row) for row in identity_matrix(d)]
                m[i][j] = c
                gens.append(tuple(tuple(row) for row in m))
    return F, gens


def symplectic_generators(dim: int, q: int) -> tuple[FiniteField, list[Matrix]]:
    """Symplectic transvections x -> x + c*B(x,v)*v for a spanning set of v.

    The form is B(x,y) = sum_i (x_i y_{n+i} - x_{n+i} y_i) on GF(q)^(2n).
    Directions: the standard basis plus all two-element sums, enough to
    reach every root subgroup.
    """
    if dim < 2 or dim % 2:
        raise ParameterDomainError(f"symplectic dimension must be even and >= 2, got {dim}")
    F = get_field(q)
    n = dim // 2

    def form(x, y):
        s = 0
        for i in range(n):
            s = F.add(s, F.mul(x[i], y[n + i]))
            s = F.sub(s, F.mul(x[n + i], y[i]))
        return s

    basis = [tuple(1 if t == i else 0 for t in range(dim)) for i in range(dim)]
    directions = list(basis)
    for a in range(dim):
        for b in range(a + 1, dim):
            directions.append(tuple(F.add(x, y) for x, y in zip(basis[a], basis[b])))

    gens = []
    for v in directions:
        # matrix of x -> x + c * B(x, v) * v: column b gets c * B(e_b, v) * v
        w = [form(basis[b], v) for b in range(dim)]
        if all(x == 0 for x in w):
            continue
        for c in F.prime_subfield_basis():
            m = [list(row) for row in identity_matrix(dim)]
            for a in range(dim):
                if v[a] == 0:
                    continue
                cv = F.mul(c, v[a])
                for b in range(dim):
                    if w[b]:
                        m[a][b] = F.add(m[a][b], F.mul(cv, w[b]))
            gens.append(tuple(tuple(row) for row in m))
    return F, gens


def special_unitary_generators(d: int, q: int) -> tuple[FiniteField, list[Matrix]]:
    """Unitary transvections x -> x + c*H(x,v)*v over GF(q^2).

    H is the identity-Gram hermitian form sum_i x_i conj(y_i) with
    conj(a) = a^q; v runs over a few isotropic directions and c over a
    GF(p)-basis of the trace-zero line (c + conj(c) = 0), which makes each
    map an isometry of determinant 1.
    """
    if d < 3:
        raise ParameterDomainError(f"unitary construction needs dimension >= 3, got {d}")
    F = get_field(q * q)
    half = F.k // 2

    def conj(a):
        return F.frobenius(a, half)

    def herm(x, y):
        s = 0
        for a, b in zip(x, y):
            s = F.add(s, F.mul(a, conj(b)))
        return s

    trace_zero = [c for c in F.elements_with_zero_trace_to(half) if c != 0]
    # greedy GF(p)-basis of the trace-zero space
    c_basis: list[int] = []
    span = {0}
    for c in trace_zero:
        if c in span:
            continue
        c_basis.append(c)
        grown = set(span)
        for s in span:
            acc = s
            for _ in range(F.p - 1):
                acc = F.add(acc, c)
                grown.add(acc)
        span = grown

    all_isotropic = [vec for vec in _projective_reps(F, d) if herm(vec, vec) == 0]
    if not all_isotropic:
        raise ParameterDomainError(f"no isotropic vectors for U({d}, {q})")
    # an evenly spread sample: lexicographically early points tend to pile
    # into a common totally isotropic subspace, which would generate a
    # proper subgroup
    target = min(len(all_isotropic), 24)
    isotropic = [all_isotropic[(i * len(all_isotropic)) // target] for i in range(target)]

    gens = []
    for v in isotropic:
        w = [conj(x) for x in v]  # H(e_b, v) = conj(v_b)
        for c in c_basis:
            m = [list(row) for row in identity_matrix(d)]
            for a in range(d):
                if v[a] == 0:
                    continue
                cv = F.mul(c, v[a])
                for b in range(d):
                    if w[b]:
                        m[a][b] = F.add(m[a][b], F.mul(cv, w[b]))
            gens.append(tuple(tuple(row) for row in m))
    return F, gens


def omega_odd_generators(dim: int, q: int) -> tuple[FiniteField, list[Matrix]]:
    """Products of two reflections with Q-values in the same square class.

    Q(x) = x_0 x_1 + x_2 x_3 + ... + x_{dim-1}^2 on GF(q)^dim, q odd. Each
    reflection r_v: x -> x - (B(x,v)/Q(v)) v (B the polarization) lies in
    O(Q) with spinor norm the square class of Q(v), so products of two
    same-class reflections land in the kernel of both determinant and
    spinor norm, the simple group. Directions are the first few
    low-support anisotropic vectors in each square class.
    """
    if dim % 2 == 0 or dim < 3:
        raise ParameterDomainError(f"odd orthogonal construction needs odd dimension >= 3, got {dim}")
    F = get_field(q)
    if F.p == 2:
        raise ParameterDomainError("odd-dimensional orthogonal construction needs odd q")
    n = (dim - 1) // 2

    def quad(x):
        s = 0
        for i in range(n):
            s = F.add(s, F.mul(x[2 * i], x[2 * i + 1]))
        return F.add(s, F.mul(x[dim - 1], x[dim - 1]))

    def bil(x, y):  # Q(x+y) - Q(x) - Q(y)
        xy = tuple(F.add(a, b) for a, b in zip(x, y))
        return F.sub(F.sub(quad(xy), quad(x)), quad(y))

    squares = {F.mul(a, a) for a in range(1, F.q)}

    def reflection(v):
        qv_inv = F.inv(quad(v))
        m = []
        basis = identity_matrix(dim)
        for a in range(dim):
            row = []
            for b in range(dim):
                # column b of the map: e_b - (B(e_b,v)/Q(v)) v, entry a
                val = basis[a][b]
                val = F.sub(val, F.mul(F.mul(bil(basis[b], v), qv_inv), v[a]))
                row.append(val)
            m.append(tuple(row))
        return tuple(m)

    by_class: dict[bool, list[tuple[int, ...]]] = {True: [], False: []}
    for vec in _projective_reps(F, dim):
        qv = quad(vec)
        if qv:
            by_class[qv in squares].append(vec)

    gens = []
    for full_pool in by_class.values():
        if len(full_pool) < 2:
            continue
        # evenly spread sample: lexicographically adjacent anisotropic
        # vectors sit in degenerate positions and generate proper subgroups
        target = min(len(full_pool), 12)
        pool = [full_pool[(i * len(full_pool)) // target] for i in range(target)]
        anchor = reflection(pool[0])
        for v in pool[1:]:
            gens.append(mat_mul(F, anchor, reflection(v)))
    return F, gens


def _projective_reps(F: FiniteField, d: int):
    """Canonical projective representatives: vectors whose first nonzero
    coordinate is 1, ascending in base-q reading of the coordinate tuple."""
    q = F.q
    for code in range(1, q**d):
        vec = []
        c = code
        for _ in range(d):
            vec.append(c % q)
            c //= q
        vec.reverse()
        first = next(x for x in vec if x)
        if first == 1:
            yield tuple(vec)


def projective_point_list(F: FiniteField, d: int) -> list[tuple[int, ...]]:
    return list(_projective_reps(F, d))


def projective_permutations(
    F: FiniteField, matrices: list[Matrix]
) -> tuple[int, list[np.ndarray]]:
    """Permutations induced on projective points by a list of matrices.

    Returns (degree, perms) with perms as 0-based image arrays following
    the canonical point ordering of projective_point_list.
    """
    d = len(matrices[0])
    points = projective_point_list(F, d)
    index = {v: i for i, v in enumerate(points)}
    degree = len(points)
    dtype = np.uint8 if degree <= 256 else np.uint16
    perms = []
    for m in matrices:
        img = np.empty(degree, dtype=dtype)
        for i, v in enumerate(points):
            w = mat_vec(F, m, v)
            first = next((x for x in w if x), 0)
            if first == 0:
                raise ParameterDomainError("singular matrix cannot act on projective space")
            if first != 1:
                s = F.inv(first)
                w = tuple(F.mul(s, x) for x in w)
            img[i] = index[w]
        perms.append(img)
    return degree, perms
