"""Finite simple group catalog: descriptors, exact orders, enumeration.

Families covered: alternating groups, the 26 sporadic groups plus the Tits
group (treated as a sporadic-like entry), classical series A/B/C/D/2A/2D,
and exceptional series G2/F4/E6/E7/E8/2E6/3D4/2B2/2F4/2G2. Orders are exact
FactoredInteger values from the standard formulas; parameter validation
enforces simplicity, and canonicalization folds the exceptional
isomorphisms onto fixed representatives (alternating preferred, e.g.
L2(4) -> A5, L4(2) -> A8, and B-series folded onto C where isomorphic).
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .datadir import data_file
from .errors import DataFileError, ParameterDomainError, UnknownGroupError
from .factored import FactoredInteger, factor_integer

CLASSICAL_SERIES = ("A", "B", "C", "D", "2A", "2D")
EXCEPTIONAL_SERIES = ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2F4", "2G2")

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24",
    "J1", "J2", "J3", "J4",
    "HS", "McL", "He", "Ru", "Suz", "ON",
    "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'",
    "HN", "Ly", "Th", "B", "M",
)
TITS_NAME = "2F4(2)'"

_SPORADIC_ALIASES = {
    "on": "ON", "o'n": "ON", "o'nan": "ON", "onan": "ON",
    "mcl": "McL", "mclaughlin": "McL",
    "fi24": "Fi24'", "f3+": "Fi24'",
    "t": TITS_NAME, "tits": TITS_NAME, "2f4(2)'": TITS_NAME,
    "baby": "B", "monster": "M",
}


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class Sporadic:
    name: str


@dataclass(frozen=True)
class Classical:
    series: str
    rank: int
    q: int


@dataclass(frozen=True)
class Exceptional:
    series: str
    q: int


GroupDescriptor = Alternating | Sporadic | Classical | Exceptional


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise ParameterDomainError."""
    if q < 2:
        raise ParameterDomainError(f"field size must be >= 2, got {q}")
    f = factor_integer(q)
    if len(f) != 1:
        raise ParameterDomainError(f"field size {q} is not a prime power")
    [(p, k)] = f.items()
    return p, k


def _is_odd_power_of(q: int, p: int) -> bool:
    try:
        base, k = prime_power_decompose(q)
    except ParameterDomainError:
        return False
    return base == p and k % 2 == 1 and k >= 3


def validate_descriptor(d: GroupDescriptor) -> None:
    """Raise ParameterDomainError unless d names a finite simple group.

    The excluded boundary cases are the classical non-simple ones:
    A1(2), A1(3), 2A2(2), B2(2)=C2(2), G2(2), 2B2(2), 2G2(3), 2F4(2).
    """
    if isinstance(d, Alternating):
        if d.n < 5:
            raise ParameterDomainError(f"alternating groups are simple only for n >= 5, got n={d.n}")
        return
    if isinstance(d, Sporadic):
        if d.name not in SPORADIC_NAMES and d.name != TITS_NAME:
            raise UnknownGroupError(f"unknown sporadic name {d.name!r}")
        return
    if isinstance(d, Classical):
        series, n, q = d.series, d.rank, d.q
        if series not in CLASSICAL_SERIES:
            raise ParameterDomainError(f"unknown classical series {series!r}")
        prime_power_decompose(q)
        if series == "A":
            if n < 1:
                raise ParameterDomainError("A-series needs rank >= 1")
            if n == 1 and q in (2, 3):
                raise ParameterDomainError(f"L2({q}) is solvable, not simple")
        elif series in ("B", "C"):
            if n < 2:
                raise ParameterDomainError(f"{series}-series needs rank >= 2")
            if n == 2 and q == 2:
                raise ParameterDomainError("S4(2) is not simple (isomorphic to Sym(6))")
        elif series == "D":
            if n < 4:
                raise ParameterDomainError("D-series needs rank >= 4")
        elif series == "2A":
            if n < 2:
                raise ParameterDomainError("2A-series needs rank >= 2")
            if n == 2 and q == 2:
                raise ParameterDomainError("U3(2) is solvable, not simple")
        elif series == "2D":
            if n < 4:
                raise ParameterDomainError("2D-series needs rank >= 4")
        return
    if isinstance(d, Exceptional):
        series, q = d.series, d.q
        if series not in EXCEPTIONAL_SERIES:
            raise ParameterDomainError(f"unknown exceptional series {series!r}")
        if series == "G2":
            prime_power_decompose(q)
            if q < 3:
                raise ParameterDomainError("G2(2) is not simple; G2 series needs q >= 3")
        elif series == "2B2":
            if not _is_odd_power_of(q, 2):
                raise ParameterDomainError("2B2 series needs q = 2^(2m+1) >= 8")
        elif series == "2G2":
            if not _is_odd_power_of(q, 3):
                raise ParameterDomainError("2G2 series needs q = 3^(2m+1) >= 27")
        elif series == "2F4":
            if not _is_odd_power_of(q, 2):
                raise ParameterDomainError(
                    "2F4 series needs q = 2^(2m+1) >= 8; for q=2 see the Tits group token 2F4(2)'"
                )
        else:
            prime_power_decompose(q)
            if q < 2:
                raise ParameterDomainError("field size must be >= 2")
        return
    raise UnknownGroupError(f"not a group descriptor: {d!r}")


def canonicalize_descriptor(d: GroupDescriptor) -> GroupDescriptor:
    """Fold exceptional isomorphisms onto fixed canonical representatives.

    >>> canonicalize_descriptor(Classical("A", 1, 4))
    Alternating(n=5)
    >>> canonicalize_descriptor(Classical("A", 3, 2))
    Alternating(n=8)
    """
    validate_descriptor(d)
    if isinstance(d, Classical):
        key = (d.series, d.rank, d.q)
        fixed = {
            ("A", 1, 4): Alternating(5),
            ("A", 1, 5): Alternating(5),
            ("A", 1, 9): Alternating(6),
            ("A", 3, 2): Alternating(8),
            ("A", 2, 2): Classical("A", 1, 7),
            ("2A", 3, 2): Classical("C", 2, 3),
        }
        if key in fixed:
            return fixed[key]
        if d.series == "B":
            if d.rank == 2:
                return Classical("C", 2, d.q)
            if d.q % 2 == 0:
                return Classical("C", d.rank, d.q)
    return d


def descriptor_text(d: GroupDescriptor) -> str:
    """Canonical display token, parseable by parse_group."""
    if isinstance(d, Alternating):
        return f"A{d.n}"
    if isinstance(d, Sporadic):
        return d.name
    if isinstance(d, Classical):
        n, q = d.rank, d.q
        if d.series == "A":
            return f"L{n + 1}({q})"
        if d.series == "2A":
            return f"U{n + 1}({q})"
        if d.series == "B":
            return f"O{2 * n + 1}({q})"
        if d.series == "C":
            return f"S{2 * n}({q})"
        if d.series == "D":
            return f"O{2 * n}+({q})"
        if d.series == "2D":
            return f"O{2 * n}-({q})"
    if isinstance(d, Exceptional):
        return f"{d.series}({d.q})"
    raise UnknownGroupError(f"not a group descriptor: {d!r}")


_ALT_RE = re.compile(r"^[Aa](\d+)$")
_CLASSICAL_RE = re.compile(r"^([LlUuSsOo])(\d+)([+-]?)\((\d+)\)$")
_LIE_RE = re.compile(r"^([23]?)([A-Ga-g])(\d+)\((\d+)\)('?)$")


def parse_group(token: str) -> GroupDescriptor:
    """Parse a group token into a validated descriptor.

    Accepted forms: alternating 'A8'; classical dimension notation 'L3(4)',
    'U4(2)', 'S6(3)', 'O7(3)', 'O8+(2)', 'O8-(2)'; Lie series notation
    'B3(3)', '2A3(2)', 'G2(4)', '2B2(8)', '3D4(2)'; sporadic names ('M11',
    'ON', "Fi24'", "2F4(2)'", case-insensitive).
    """
    token = token.strip()
    if not token:
        raise UnknownGroupError("empty group token")

    low = token.lower()
    if low in _SPORADIC_ALIASES:
        d = Sporadic(_SPORADIC_ALIASES[low])
        validate_descriptor(d)
        return d
    for name in SPORADIC_NAMES + (TITS_NAME,):
        if low == name.lower():
            d = Sporadic(name)
            validate_descriptor(d)
            return d

    m = _ALT_RE.match(token)
    if m:
        d = Alternating(int(m.group(1)))
        validate_descriptor(d)
        return d

    m = _CLASSICAL_RE.match(token)
    if m:
        letter, dim_s, sign, q_s = m.groups()
        dim, q = int(dim_s), int(q_s)
        letter = letter.upper()
        if letter in ("L", "U", "S") and sign:
            raise UnknownGroupError(f"sign suffix only applies to O-dimension tokens: {token!r}")
        if letter == "L":
            if dim < 2:
                raise ParameterDomainError(f"L{dim}({q}): dimension must be >= 2")
            d = Classical("A", dim - 1, q)
        elif letter == "U":
            if dim < 3:
                raise ParameterDomainError(f"U{dim}({q}): dimension must be >= 3")
            d = Classical("2A", dim - 1, q)
        elif letter == "S":
            if dim < 4 or dim % 2:
                raise ParameterDomainError(f"S{dim}({q}): dimension must be even and >= 4")
            d = Classical("C", dim // 2, q)
        else:
            if dim % 2 == 1:
                if sign:
                    raise UnknownGroupError(f"odd-dimension orthogonal token takes no sign: {token!r}")
                d = Classical("B", (dim - 1) // 2, q)
            elif sign == "+":
                d = Classical("D", dim // 2, q)
            elif sign == "-":
                d = Classical("2D", dim // 2, q)
            else:
                raise UnknownGroupError(
                    f"even-dimension orthogonal token needs a sign, e.g. O{dim}+({q}) or O{dim}-({q})"
                )
        validate_descriptor(d)
        return d

    m = _LIE_RE.match(token)
    if m:
        twist, letter, idx_s, q_s, prime_mark = m.groups()
        letter = letter.upper()
        idx, q = int(idx_s), int(q_s)
        if prime_mark:
            raise UnknownGroupError(f"unknown group token {token!r}")
        series = f"{twist}{letter}{idx}" if letter in "EFG" else None
        if letter in ("E", "F", "G"):
            if series not in EXCEPTIONAL_SERIES:
                raise UnknownGroupError(f"unknown exceptional series in {token!r}")
            d = Exceptional(series, q)
        elif letter == "D" and twist == "3":
            if idx != 4:
                raise UnknownGroupError(f"triality series exists only as 3D4: {token!r}")
            d = Exceptional("3D4", q)
        elif letter == "B" and twist == "2" and idx == 2:
            # ambiguous with the classical series 2B does not exist; 2B2 is Suzuki
            d = Exceptional("2B2", q)
        elif letter in ("A", "B", "C", "D"):
            series = f"{twist}{letter}" if twist else letter
            if series not in CLASSICAL_SERIES:
                raise UnknownGroupError(f"unknown classical series in {token!r}")
            d = Classical(series, idx, q)
        else:
            raise UnknownGroupError(f"unknown group token {token!r}")
        validate_descriptor(d)
        return d

    raise UnknownGroupError(f"unknown group token {token!r}")


# ── order formulas ──────────────────────────────────────────────────────────

def _q_power(q: int, e: int) -> FactoredInteger:
    p, k = prime_power_decompose(q)
    return FactoredInteger._raw({p: k * e})


def _product_of(terms: list[int]) -> FactoredInteger:
    out = FactoredInteger.one()
    for t in terms:
        out = out * FactoredInteger.from_int(t)
    return out


@lru_cache(maxsize=4096)
def order_of_descriptor(d: GroupDescriptor) -> FactoredInteger:
    """Exact order of the simple group named by d.

    >>> str(order_of_descriptor(Alternating(8)))
    '2^6*3^2*5*7'
    >>> order_of_descriptor(Classical("A", 2, 4)).value
    20160
    """
    validate_descriptor(d)
    if isinstance(d, Alternating):
        return FactoredInteger.from_int(math.factorial(d.n)).divide_exact(
            FactoredInteger.from_int(2)
        )
    if isinstance(d, Sporadic):
        return _sporadic_table()[d.name].order
    if isinstance(d, Classical):
        n, q = d.rank, d.q
        if d.series == "A":
            dim = n + 1
            o = _q_power(q, dim * (dim - 1) // 2)
            o = o * _product_of([q**i - 1 for i in range(2, dim + 1)])
            return o.divide_exact(FactoredInteger.from_int(math.gcd(dim, q - 1)))
        if d.series == "2A":
            dim = n + 1
            o = _q_power(q, dim * (dim - 1) // 2)
            o = o * _product_of([q**i - (-1) ** i for i in range(2, dim + 1)])
            return o.divide_exact(FactoredInteger.from_int(math.gcd(dim, q + 1)))
        if d.series in ("B", "C"):
            o = _q_power(q, n * n)
            o = o * _product_of([q ** (2 * i) - 1 for i in range(1, n + 1)])
            return o.divide_exact(FactoredInteger.from_int(math.gcd(2, q - 1)))
        if d.series == "D":
            o = _q_power(q, n * (n - 1))
            o = o * _product_of([q**n - 1] + [q ** (2 * i) - 1 for i in range(1, n)])
            return o.divide_exact(FactoredInteger.from_int(math.gcd(4, q**n - 1)))
        if d.series == "2D":
            o = _q_power(q, n * (n - 1))
            o = o * _product_of([q**n + 1] + [q ** (2 * i) - 1 for i in range(1, n)])
            return o.divide_exact(FactoredInteger.from_int(math.gcd(4, q**n + 1)))
    if isinstance(d, Exceptional):
        q = d.q
        series = d.series
        if series == "G2":
            return _q_power(q, 6) * _product_of([q**6 - 1, q**2 - 1])
        if series == "F4":
            return _q_power(q, 24) * _product_of([q**12 - 1, q**8 - 1, q**6 - 1, q**2 - 1])
        if series == "E6":
            o = _q_power(q, 36) * _product_of(
                [q**12 - 1, q**9 - 1, q**8 - 1, q**6 - 1, q**5 - 1, q**2 - 1]
            )
            return o.divide_exact(FactoredInteger.from_int(math.gcd(3, q - 1)))
        if series == "E7":
            o = _q_power(q, 63) * _product_of(
                [q**18 - 1, q**14 - 1, q**12 - 1, q**10 - 1, q**8 - 1, q**6 - 1, q**2 - 1]
            )
            return o.divide_exact(FactoredInteger.from_int(math.gcd(2, q - 1)))
        if series == "E8":
            return _q_power(q, 120) * _product_of(
                [q**30 - 1, q**24 - 1, q**20 - 1, q**18 - 1, q**14 - 1, q**12 - 1, q**8 - 1, q**2 - 1]
            )
        if series == "2E6":
            o = _q_power(q, 36) * _product_of(
                [q**12 - 1, q**9 + 1, q**8 - 1, q**6 - 1, q**5 + 1, q**2 - 1]
            )
            return o.divide_exact(FactoredInteger.from_int(math.gcd(3, q + 1)))
        if series == "3D4":
            return _q_power(q, 12) * _product_of([q**8 + q**4 + 1, q**6 - 1, q**2 - 1])
        if series == "2B2":
            return _q_power(q, 2) * _product_of([q**2 + 1, q - 1])
        if series == "2G2":
            return _q_power(q, 3) * _product_of([q**3 + 1, q - 1])
        if series == "2F4":
            return _q_power(q, 12) * _product_of([q**6 + 1, q**4 - 1, q**3 + 1, q - 1])
    raise UnknownGroupError(f"not a group descriptor: {d!r}")


# ── sporadic quantitative records ───────────────────────────────────────────

@dataclass(frozen=True)
class SporadicQuantRecord:
    """Order, largest prime, and exact count of elements of that order."""

    name: str
    order: FactoredInteger
    largest_prime: int
    count: FactoredInteger
    provenance: str


@lru_cache(maxsize=1)
def _sporadic_table() -> dict[str, SporadicQuantRecord]:
    path = data_file("sporadic_quant.json")
    try:
        rows = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DataFileError(f"cannot read sporadic table {path}: {exc}") from exc
    table = {}
    for name, row in rows.items():
        order = FactoredInteger.parse(row["order"])
        p = int(row["largest_prime"])
        count = FactoredInteger.parse(row["count"])
        if order.exponent(p) != 1 or p != order.largest_prime():
            raise DataFileError(f"sporadic table row {name}: largest prime {p} inconsistent with order")
        table[name] = SporadicQuantRecord(name, order, p, count, str(row["provenance"]))
    missing = [n for n in SPORADIC_NAMES + (TITS_NAME,) if n not in table]
    if missing:
        raise DataFileError(f"sporadic table incomplete, missing {missing}")
    return table


def sporadic_quant_record(name: str) -> SporadicQuantRecord:
    """Vendored quantitative record for a sporadic group (or the Tits group).

    >>> r = sporadic_quant_record("M11")
    >>> str(r.order), r.largest_prime, str(r.count)
    ('2^4*3^2*5*11', 11, '2^5*3^2*5')
    """
    low = name.strip().lower()
    canonical = _SPORADIC_ALIASES.get(low)
    if canonical is None:
        for candidate in SPORADIC_NAMES + (TITS_NAME,):
            if low == candidate.lower():
                canonical = candidate
                break
    if canonical is None:
        raise UnknownGroupError(f"unknown sporadic name {name!r}")
    return _sporadic_table()[canonical]


# ── catalog enumeration ─────────────────────────────────────────────────────

@dataclass(frozen=True)
class CatalogMember:
    descriptor: GroupDescriptor
    order: FactoredInteger

    @property
    def text(self) -> str:
        return descriptor_text(self.descriptor)


def _prime_powers_ascending():
    q = 2
    while True:
        f = factor_integer(q)
        if len(f) == 1:
            yield q
        q += 1


def _min_order_at_rank(series: str, rank: int) -> FactoredInteger | None:
    """Order at the smallest valid q for (series, rank); None if none valid."""
    for q in _prime_powers_ascending():
        d = Classical(series, rank, q)
        try:
            validate_descriptor(d)
        except ParameterDomainError:
            if q > 16:
                return None
            continue
        return order_of_descriptor(d)


def _exceptional_q_domain(series: str):
    """Valid field sizes for an exceptional series, ascending."""
    if series in ("2B2", "2F4"):
        q = 8
        while True:
            yield q
            q *= 4
    elif series == "2G2":
        q = 27
        while True:
            yield q
            q *= 9
    elif series == "G2":
        yield from (q for q in _prime_powers_ascending() if q >= 3)
    else:
        yield from _prime_powers_ascending()


def enumerate_catalog(max_order: int) -> list[CatalogMember]:
    """All finite simple groups of order <= max_order, canonically deduplicated,
    sorted by (order, token).

    >>> [m.text for m in enumerate_catalog(1000)]
    ['A5', 'L2(7)', 'A6', 'L2(8)', 'L2(11)']
    """
    if max_order < 1:
        raise ParameterDomainError(f"max_order must be positive, got {max_order}")
    found: dict[GroupDescriptor, FactoredInteger] = {}

    def consider(d: GroupDescriptor) -> bool:
        d = canonicalize_descriptor(d)
        o = order_of_descriptor(d)
        if o.value > max_order:
            return False
        found.setdefault(d, o)
        return True

    n = 5
    while math.factorial(n) // 2 <= max_order:
        consider(Alternating(n))
        n += 1

    for name in SPORADIC_NAMES + (TITS_NAME,):
        rec = _sporadic_table()[name]
        if rec.order.value <= max_order:
            consider(Sporadic(name))

    min_rank = {"A": 1, "B": 2, "C": 2, "D": 4, "2A": 2, "2D": 4}
    for series in CLASSICAL_SERIES:
        rank = min_rank[series]
        while True:
            base = _min_order_at_rank(series, rank)
            if base is None or base.value > max_order:
                break
            for q in _prime_powers_ascending():
                d = Classical(series, rank, q)
                try:
                    validate_descriptor(d)
                except ParameterDomainError:
                    continue
                if order_of_descriptor(d).value > max_order:
                    break
                consider(d)
            rank += 1

    for series in EXCEPTIONAL_SERIES:
        for q in _exceptional_q_domain(series):
            if order_of_descriptor(Exceptional(series, q)).value > max_order:
                break
            consider(Exceptional(series, q))

    members = [CatalogMember(d, o) for d, o in found.items()]
    members.sort(key=lambda m: (m.order.value, m.text))
    return members
