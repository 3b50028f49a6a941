"""Small finite fields with table-driven arithmetic.

Elements of GF(p^k) are integers 0..q-1 encoding polynomials over GF(p) in
base p (digit i is the coefficient of x^i). The modulus is the
lexicographically smallest monic irreducible polynomial of degree k, chosen
deterministically and verified, so element encodings are stable across runs
and platforms. Intended for the small fields behind matrix group
realizations; construction is capped at q <= 4096.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import ParameterDomainError
from ..factored import factor_integer

_TABLE_LIMIT = 4096


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """(a*b) mod the monic polynomial mod, coefficients over GF(p), ascending."""
    deg = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for top in range(len(out) - 1, deg - 1, -1):
        c = out[top]
        if c:
            out[top] = 0
            for j in range(deg):
                out[top - deg + j] = (out[top - deg + j] - c * mod[j]) % p
    while len(out) > deg:
        out.pop()
    while len(out) < deg:
        out.append(0)
    return out


def _poly_pow_frobenius(a: list[int], mod: list[int], p: int) -> list[int]:
    """a^p mod the modulus."""
    result = [1] + [0] * (len(mod) - 2)
    base = list(a)
    e = p
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    def norm(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = norm(list(a)), norm(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and norm(r):
            if not r:
                break
            c = (r[-1] * inv) % p
            shift = len(r) - len(b)
            for j, bj in enumerate(b):
                r[shift + j] = (r[shift + j] - c * bj) % p
            norm(r)
        a, b = b, r
    return a


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Monic mod of degree k is irreducible over GF(p) iff x^(p^k) = x mod it
    and gcd(x^(p^(k/l)) - x, mod) = 1 for every prime l dividing k."""
    k = len(mod) - 1
    if k == 1:
        return True
    x = [0, 1] + [0] * (k - 2) if k >= 2 else [0]
    frob = list(x)
    powers = {0: list(x)}
    for step in range(1, k + 1):
        frob = _poly_pow_frobenius(frob, mod, p)
        powers[step] = list(frob)
    if powers[k] != x:
        return False
    for ell in factor_integer(k):
        diff = [(powers[k // ell][i] - x[i]) % p for i in range(k)]
        g = _poly_gcd(diff, mod, p)
        if len(g) > 1:
            return False
    return True


def _minimal_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k over GF(p),
    comparing constant-first coefficient tuples."""
    if k == 1:
        return [0, 1]
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue  # reducible: divisible by x
        mod = coeffs + [1]
        if _is_irreducible(mod, p):
            return mod
    raise ParameterDomainError(f"no irreducible polynomial found for GF({p}^{k})")


class FiniteField:
    """GF(q) with full add/mul tables and element encoding stable by modulus.

    >>> F = FiniteField(4)
    >>> F.mul(2, 3), F.add(2, 3), F.inv(2)
    (1, 1, 3)
    >>> FiniteField(9).poly
    (1, 0, 1)
    """

    def __init__(self, q: int):
        f = factor_integer(q)
        if len(f) != 1:
            raise ParameterDomainError(f"field size {q} is not a prime power")
        if q > _TABLE_LIMIT:
            raise ParameterDomainError(f"field tables capped at q <= {_TABLE_LIMIT}, got {q}")
        [(p, k)] = f.items()
        self.q = q
        self.p = p
        self.k = k
        mod = _minimal_irreducible(p, k)
        self.poly = tuple(mod)  # ascending coefficients, monic

        def decode(e: int) -> list[int]:
            digits = []
            for _ in range(k):
                digits.append(e % p)
                e //= p
            return digits

        def encode(digits: list[int]) -> int:
            out = 0
            for d in reversed(digits):
                out = out * p + d
            return out

        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = decode(a)
            for b in range(a, q):
                db = decode(b)
                s = encode([(x + y) % p for x, y in zip(da, db)])
                add[a][b] = s
                add[b][a] = s
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            da = decode(a)
            for b in range(a, q):
                db = decode(b)
                m = encode(_poly_mul_mod(da, db, mod, p))
                mul[a][b] = m
                mul[b][a] = m
        self._add = add
        self._mul = mul
        neg = [0] * q
        for a in range(q):
            neg[a] = encode([(-x) % p for x in decode(a)])
        self._neg = neg
        inv = [0] * q
        for a in range(1, q):
            b = self.pow(a, q - 2)
            if mul[a][b] != 1:
                raise ParameterDomainError(f"inverse table construction failed in GF({q})")
            inv[a] = b
        self._inv = inv

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul[out][base]
            base = self._mul[base][base]
            e >>= 1
        return out

    def frobenius(self, a: int, times: int = 1) -> int:
        """a^(p^times); with times = k/2 this is the conjugation of a
        quadratic extension over its fixed field."""
        return self.pow(a, self.p**times)

    def prime_subfield_basis(self) -> list[int]:
        """GF(p)-basis 1, x, x^2, ... of the field, as element codes."""
        return [self.p**i for i in range(self.k)]

    def elements_with_zero_trace_to(self, sub_k: int) -> list[int]:
        """All a with a + a^(p^sub_k) + ... (relative trace to GF(p^sub_k)) zero.

        Only the quadratic case k = 2*sub_k is supported; used for the
        twisted form constructions.
        """
        if self.k != 2 * sub_k:
            raise ParameterDomainError("relative trace supported only for quadratic extensions")
        out = []
        for a in range(self.q):
            if self.add(a, self.frobenius(a, sub_k)) == 0:
                out.append(a)
        return out


@lru_cache(maxsize=64)
def get_field(q: int) -> FiniteField:
    return FiniteField(q)
