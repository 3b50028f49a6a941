"""Exact factored-integer arithmetic.

Group orders are kept as {prime: exponent} maps so that products, exact
quotients, gcds and lcms never leave the factored representation. Plain
integers below 2**127 can be factored on demand: trial division by primes
below 2**20, then Brent's cycle-finding variant of the rho method, with
primality certified by Miller-Rabin witnesses (proven deterministic below
3.3e24) plus a strong Lucas test for the remaining 128-bit range.
"""

from __future__ import annotations

import math

from .errors import FactorRangeError, NotDivisibleError

FACTOR_LIMIT = 1 << 127

_TRIAL_LIMIT = 1 << 20

# Witness set proven sufficient for all n < 3317044064679887385961981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_PROVEN_BOUND = 3317044064679887385961981

_small_primes: list[int] | None = None


def _sieve_small_primes() -> list[int]:
    global _small_primes
    if _small_primes is None:
        flags = bytearray([1]) * _TRIAL_LIMIT
        flags[0] = flags[1] = 0
        for p in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        _small_primes = [i for i in range(_TRIAL_LIMIT) if flags[i]]
    return _small_primes


def _miller_rabin(n: int, base: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base % n, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameter choice; n odd, > 2, not a perfect square.
    d = 5
    while True:
        j = _jacobi(d % n, n)
        if j == 0:
            return False
        if j == -1:
            break
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # compute U_k, V_k, Q^k by an MSB-first ladder
    u, v, qk = 1, p, q % n
    inv2 = (n + 1) // 2
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * inv2 % n, (d * u + p * v) * inv2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality for 0 <= n < 2**127, certified as documented above.

    Examples
    --------
    >>> [k for k in range(20) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    >>> is_prime(2**61 - 1)
    True
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    for base in _MR_BASES:
        if not _miller_rabin(n, base):
            return False
    if n < _MR_PROVEN_BOUND:
        return True
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas(n)


def _brent_rho(n: int) -> int:
    # nontrivial factor of an odd composite n; deterministic restart sequence
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
        c += 1


def factor_integer(n: int) -> dict[int, int]:
    """Factor n into {prime: exponent}, for 1 <= n < 2**127.

    Examples
    --------
    >>> factor_integer(7920)
    {2: 4, 3: 2, 5: 1, 11: 1}
    >>> factor_integer(1)
    {}
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise FactorRangeError(f"factor_integer needs an int, got {type(n).__name__}")
    if n < 1 or n >= FACTOR_LIMIT:
        raise FactorRangeError(f"factor_integer domain is [1, 2**127), got {n}")
    factors: dict[int, int] = {}
    for p in _sieve_small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            d = _brent_rho(m)
            stack.append(d)
            stack.append(m // d)
    return dict(sorted(factors.items()))


class FactoredInteger:
    """Immutable positive integer held as a prime-to-exponent map.

    Renders in caret-star form with primes ascending:

    >>> str(FactoredInteger.from_int(7920))
    '2^4*3^2*5*11'
    >>> str(FactoredInteger.one())
    '1'
    """

    __slots__ = ("_f", "_value")

    def __init__(self, factors: dict[int, int]):
        for p, e in factors.items():
            if not is_prime(p):
                raise ValueError(f"factor base {p} is not prime")
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"exponent for {p} must be a positive int, got {e}")
        object.__setattr__(self, "_f", dict(sorted(factors.items())))
        object.__setattr__(self, "_value", None)

    @classmethod
    def _raw(cls, factors: dict[int, int]) -> "FactoredInteger":
        # internal: factors already valid and free of zero exponents
        self = object.__new__(cls)
        object.__setattr__(self, "_f", dict(sorted(factors.items())))
        object.__setattr__(self, "_value", None)
        return self

    @classmethod
    def one(cls) -> "FactoredInteger":
        return cls._raw({})

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        return cls._raw(factor_integer(n))

    @classmethod
    def parse(cls, text: str) -> "FactoredInteger":
        """Inverse of str(): parse '2^4*3^2*5*11' (or '1')."""
        text = text.strip()
        if text == "1":
            return cls.one()
        factors: dict[int, int] = {}
        for token in text.split("*"):
            base, _, exp = token.partition("^")
            try:
                p = int(base)
                e = int(exp) if exp else 1
            except ValueError:
                raise ValueError(f"bad factored-integer token {token!r}") from None
            if p in factors:
                raise ValueError(f"repeated prime {p} in {text!r}")
            factors[p] = e
        return cls(factors)

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._f)

    @property
    def value(self) -> int:
        v = self._value
        if v is None:
            v = 1
            for p, e in self._f.items():
                v *= p**e
            object.__setattr__(self, "_value", v)
        return v

    def exponent(self, p: int) -> int:
        return self._f.get(p, 0)

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(self._f)

    def largest_prime(self) -> int:
        if not self._f:
            raise ValueError("1 has no prime divisors")
        return max(self._f)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        f = dict(self._f)
        for p, e in other._f.items():
            f[p] = f.get(p, 0) + e
        return FactoredInteger._raw(f)

    def divide_exact(self, other: "FactoredInteger") -> "FactoredInteger":
        f = dict(self._f)
        for p, e in other._f.items():
            have = f.get(p, 0)
            if have < e:
                raise NotDivisibleError(
                    f"{self} is not divisible by {other}: prime {p} has exponent {have} < {e}"
                )
            if have == e:
                del f[p]
            else:
                f[p] = have - e
        return FactoredInteger._raw(f)

    def power(self, k: int) -> "FactoredInteger":
        if k < 0:
            raise ValueError("negative powers leave the factored-integer domain")
        if k == 0:
            return FactoredInteger.one()
        return FactoredInteger._raw({p: e * k for p, e in self._f.items()})

    def gcd(self, other: "FactoredInteger") -> "FactoredInteger":
        f = {}
        for p, e in self._f.items():
            if p in other._f:
                f[p] = min(e, other._f[p])
        return FactoredInteger._raw(f)

    def lcm(self, other: "FactoredInteger") -> "FactoredInteger":
        f = dict(self._f)
        for p, e in other._f.items():
            f[p] = max(f.get(p, 0), e)
        return FactoredInteger._raw(f)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        return self._f == other._f

    def __hash__(self) -> int:
        return hash(frozenset(self._f.items()))

    def __lt__(self, other: "FactoredInteger") -> bool:
        return self.value < other.value

    def __le__(self, other: "FactoredInteger") -> bool:
        return self.value <= other.value

    def __gt__(self, other: "FactoredInteger") -> bool:
        return self.value > other.value

    def __ge__(self, other: "FactoredInteger") -> bool:
        return self.value >= other.value

    def __str__(self) -> str:
        if not self._f:
            return "1"
        parts = []
        for p, e in self._f.items():
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"FactoredInteger({self._f!r})"


def totient_of_prime_power(p: int, e: int) -> FactoredInteger:
    """Euler phi of p**e in factored form.

    >>> str(totient_of_prime_power(7, 1))
    '2*3'
    >>> str(totient_of_prime_power(2, 5))
    '2^4'
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    out = FactoredInteger.from_int(p - 1)
    if e > 1:
        out = out * FactoredInteger._raw({p: e - 1})
    return out
