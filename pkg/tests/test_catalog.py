"""Group descriptors: parsing, canonical coincidences, order formulas,
catalog enumeration, and the bundled sporadic records."""

from __future__ import annotations

import pytest

from sgq import (
    Alternating,
    Classical,
    Exceptional,
    Sporadic,
    canonicalize_descriptor,
    descriptor_text,
    enumerate_catalog,
    order_of_descriptor,
    parse_group,
    sporadic_quant_record,
    validate_descriptor,
)
from sgq.errors import ParameterDomainError, UnknownGroupError

# classical orders cross-checked against the standard product formulas
KNOWN_ORDERS = {
    "A5": 60,
    "A6": 360,
    "A7": 2520,
    "A8": 20160,
    "A10": 1814400,
    "L2(7)": 168,
    "L2(8)": 504,
    "L2(11)": 660,
    "L3(4)": 20160,
    "L5(2)": 9999360,
    "U3(3)": 6048,
    "U4(2)": 25920,
    "S4(3)": 25920,
    "S6(3)": 4585351680,
    "O7(3)": 4585351680,
    "O8+(2)": 174182400,
    "O8-(2)": 197406720,
    "G2(3)": 4245696,
    "2B2(8)": 29120,
    "3D4(2)": 211341312,
    "2F4(2)'": 17971200,
    "M11": 7920,
    "M12": 95040,
    "J2": 604800,
    "Fi23": 4089470473293004800,
}


@pytest.mark.parametrize("token, order", sorted(KNOWN_ORDERS.items()))
def test_order_formulas(token, order):
    assert order_of_descriptor(parse_group(token)).value == order


def test_parse_families():
    assert parse_group("A8") == Alternating(8)
    assert parse_group("L3(4)") == Classical("A", 2, 4)
    assert parse_group("U4(3)") == Classical("2A", 3, 3)
    assert parse_group("S6(3)") == Classical("C", 3, 3)
    assert parse_group("O7(3)") == Classical("B", 3, 3)
    assert parse_group("O8+(2)") == Classical("D", 4, 2)
    assert parse_group("O8-(2)") == Classical("2D", 4, 2)
    assert parse_group("2B2(8)") == Exceptional("2B2", 8)
    assert parse_group("G2(4)") == Exceptional("G2", 4)
    assert parse_group("M11") == Sporadic("M11")
    assert parse_group("Fi23") == Sporadic("Fi23")


def test_parse_case_insensitive():
    assert parse_group("a8") == parse_group("A8")
    assert parse_group("l3(4)") == parse_group("L3(4)")
    assert parse_group("m11") == parse_group("M11")
    assert parse_group("fi23") == parse_group("Fi23")
    assert parse_group("2b2(8)") == parse_group("2B2(8)")


def test_parse_unknown_tokens():
    for token in ("X5(2)", "A", "L3", "Q8", "", "L3(4", "He2"):
        with pytest.raises(UnknownGroupError):
            parse_group(token)


def test_parse_rejects_nonsimple_parameters():
    # solvable or otherwise non-simple corners of each family
    for token in (
        "A4", "L2(2)", "L2(3)", "S4(2)", "G2(2)", "2B2(2)",
        "2G2(3)", "U3(2)", "L2(6)", "O5(2)",
    ):
        with pytest.raises(ParameterDomainError):
            parse_group(token)


def test_validate_descriptor_direct():
    validate_descriptor(Alternating(5))
    with pytest.raises(ParameterDomainError):
        validate_descriptor(Alternating(4))
    with pytest.raises(ParameterDomainError):
        validate_descriptor(Classical("A", 1, 6))  # 6 is not a prime power
    with pytest.raises(UnknownGroupError):
        validate_descriptor(Sporadic("K1"))
    with pytest.raises(UnknownGroupError):
        validate_descriptor("A5")  # plain strings are not descriptors


@pytest.mark.parametrize(
    "token, canonical",
    [
        ("L2(4)", "A5"),
        ("L2(5)", "A5"),
        ("L2(9)", "A6"),
        ("L4(2)", "A8"),
        ("L3(2)", "L2(7)"),
        ("U4(2)", "S4(3)"),
        ("O5(3)", "S4(3)"),
        ("O5(7)", "S4(7)"),
        ("O7(2)", "S6(2)"),
    ],
)
def test_canonical_coincidences(token, canonical):
    got = canonicalize_descriptor(parse_group(token))
    assert got == canonicalize_descriptor(parse_group(canonical))
    assert descriptor_text(got) == canonical


def test_coincident_orders_agree():
    # canonicalization must never change the order
    for token in ("L2(4)", "L2(5)", "L2(9)", "L4(2)", "L3(2)", "U4(2)", "O5(3)"):
        d = parse_group(token)
        assert order_of_descriptor(d) == order_of_descriptor(canonicalize_descriptor(d))


def test_descriptor_text_round_trip():
    for token in KNOWN_ORDERS:
        d = parse_group(token)
        assert parse_group(descriptor_text(d)) == d


def test_sporadic_aliases():
    assert parse_group("tits") == parse_group("2F4(2)'")
    assert parse_group("F3+") == parse_group("Fi24'")
    assert parse_group("baby") == Sporadic("B")
    assert parse_group("monster") == Sporadic("M")


def test_enumerate_catalog_below_1000():
    assert [m.text for m in enumerate_catalog(1000)] == [
        "A5", "L2(7)", "A6", "L2(8)", "L2(11)",
    ]


def test_enumerate_catalog_million(catalog_small):
    assert len(catalog_small) == 56
    assert catalog_small[-1].text == "S4(4)"
    texts = [m.text for m in catalog_small]
    assert "A8" in texts and "L3(4)" in texts
    # coincidences deduplicated: A8 appears once, L4(2) not at all
    assert texts.count("A8") == 1
    assert "L4(2)" not in texts
    assert "U4(2)" not in texts and "S4(3)" in texts


def test_enumerate_catalog_sorted_and_bounded(catalog_small):
    orders = [m.order.value for m in catalog_small]
    assert orders == sorted(orders)
    assert all(o <= 10**6 for o in orders)
    keyed = [(m.order.value, m.text) for m in catalog_small]
    assert keyed == sorted(keyed)
    assert len({m.descriptor for m in catalog_small}) == len(catalog_small)


def test_enumerate_catalog_rejects_bad_bound():
    with pytest.raises(ParameterDomainError):
        enumerate_catalog(0)


def test_sporadic_quant_record_fields():
    rec = sporadic_quant_record("M11")
    assert rec.order.value == 7920
    assert rec.largest_prime == 11
    assert rec.count.value == 1440
    assert rec.provenance in ("paper", "vendored-atlas")
    with pytest.raises(UnknownGroupError):
        sporadic_quant_record("M13")


def test_sporadic_records_consistent():
    # count of elements of order p must be divisible by p-1 and stay below the order
    names = (
        "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4",
        "HS", "McL", "He", "Ru", "Suz", "ON", "Co1", "Co2", "Co3",
        "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B", "M", "2F4(2)'",
    )
    for name in names:
        rec = sporadic_quant_record(name)
        p = rec.largest_prime
        assert rec.order.largest_prime() == p
        assert rec.count.value % (p - 1) == 0
        assert rec.count.value < rec.order.value
