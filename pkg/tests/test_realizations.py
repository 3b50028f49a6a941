"""Permutation realizations and BSGS order: checked against brute-force
closure for small groups and against catalog order formulas throughout."""

from __future__ import annotations

import math

import numpy as np
import pytest

from sgq import order_of_descriptor, parse_group
from sgq.errors import GeneratorFileError, ParameterDomainError, UnknownGroupError
from sgq.realize.bsgs import StabilizerChain, group_order
from sgq.realize.realization import (
    alternating_realization,
    load_generator_file,
    parse_generator_text,
    realization_for,
)

REALIZED = (
    "A5", "A6", "A7", "A8", "A9", "A10",
    "L2(7)", "L2(8)", "L2(11)", "L3(4)", "S4(3)", "U3(3)",
    "M11", "M12", "J2", "S6(3)", "O7(3)",
)

EXPECTED_DEGREE = {
    "A5": 5, "A10": 10,
    "L2(7)": 8, "L2(8)": 9, "L2(11)": 12,  # projective lines q+1
    "L3(4)": 21, "S4(3)": 40, "U3(3)": 91,
    "M11": 11, "M12": 12, "J2": 100,
    "S6(3)": 364, "O7(3)": 1093,
}


def closure_order(gens: list[np.ndarray], degree: int) -> int:
    """Brute-force BFS closure; the independent oracle for small groups."""
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            arr = np.array(g)
            for h in gens:
                prod = tuple(arr[h])  # compose as a[b[x]]
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize("token", ("A5", "L2(7)", "L2(11)"))
def test_bsgs_matches_brute_force(token):
    r = realization_for(parse_group(token))
    assert group_order(r.generators, r.degree).value == closure_order(
        list(r.generators), r.degree
    )


@pytest.mark.parametrize("token", REALIZED)
def test_bsgs_matches_order_formula(token):
    d = parse_group(token)
    r = realization_for(d)
    assert group_order(list(r.generators), r.degree) == order_of_descriptor(d)


@pytest.mark.parametrize("token", sorted(EXPECTED_DEGREE))
def test_realization_degrees(token):
    assert realization_for(parse_group(token)).degree == EXPECTED_DEGREE[token]


def test_realizations_are_transitive():
    # every vendored or constructed action here is transitive
    for token in ("A5", "L3(4)", "M11", "M12", "J2"):
        r = realization_for(parse_group(token))
        reached = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in r.generators:
                y = int(g[x])
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        assert len(reached) == r.degree


def test_alternating_realization_contents():
    for n in range(3, 9):
        r = alternating_realization(n)
        assert r.degree == n
        assert group_order(list(r.generators), n).value == math.factorial(n) // 2
        for g in r.generators:
            sign = _permutation_sign(g)
            assert sign == 1
    with pytest.raises(UnknownGroupError):
        alternating_realization(2)


def _permutation_sign(perm: np.ndarray) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = int(perm[x])
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def test_generator_matrix_layout():
    r = realization_for(parse_group("M11"))
    m = r.generator_matrix()
    assert m.shape == (2, 11)
    assert m.dtype == np.uint8
    big = realization_for(parse_group("O7(3)")).generator_matrix()
    assert big.dtype == np.uint16  # degree 1093 does not fit in uint8


def test_stabilizer_chain_membership():
    r = realization_for(parse_group("A5"))
    chain = StabilizerChain(list(r.generators), r.degree)
    gens = list(r.generators)
    assert chain.contains(gens[0][gens[1]])
    odd = np.array([1, 0, 2, 3, 4], dtype=np.uint8)  # a transposition
    assert not chain.contains(odd)


def test_stabilizer_chain_rejects_bad_generators():
    with pytest.raises(ParameterDomainError):
        StabilizerChain([np.array([0, 0, 1], dtype=np.uint8)], 3)
    with pytest.raises(ParameterDomainError):
        StabilizerChain([np.array([1, 0], dtype=np.uint8)], 3)
    with pytest.raises(ParameterDomainError):
        StabilizerChain([], 3)


def test_no_realization_for_unvendored_sporadic():
    with pytest.raises(UnknownGroupError):
        realization_for(parse_group("2B2(8)"))
    with pytest.raises(UnknownGroupError):
        realization_for(parse_group("M24"))


def test_parse_generator_text_round_trip():
    degree, gens = parse_generator_text(
        "# comment line\ndegree 4\n2 3 4 1\n2 1 4 3\n", source="inline"
    )
    assert degree == 4
    assert [list(g) for g in gens] == [[1, 2, 3, 0], [1, 0, 3, 2]]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2 3 1\n", "degree"),  # missing header
        ("degree 3\n1 1 2\n", "permutation"),  # repeated image
        ("degree 3\n1 2\n", "3"),  # wrong image count
        ("degree 3\n1 2 4\n", "permutation"),  # image out of range
        ("degree x\n", "degree"),
    ],
)
def test_parse_generator_text_errors(text, fragment):
    with pytest.raises(GeneratorFileError) as err:
        parse_generator_text(text, source="bad.gens")
    assert "bad.gens" in str(err.value)
    assert fragment in str(err.value)


def test_load_vendored_generator_files():
    from sgq.datadir import data_file

    degree, gens = load_generator_file(data_file("m11.gens"))
    assert degree == 11 and len(gens) == 2
    degree, gens = load_generator_file(data_file("j2.gens"))
    assert degree == 100 and len(gens) == 2


def test_load_generator_file_missing():
    with pytest.raises(GeneratorFileError):
        load_generator_file("/nonexistent/nowhere.gens")
