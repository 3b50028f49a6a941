"""Product-replacement sampling: reproducibility and statistical sanity."""

from __future__ import annotations

import pytest

from sgq import parse_group
from sgq.errors import ParameterDomainError
from sgq.realize.realization import realization_for
from sgq.sampling import estimate_order_fraction, sample_order_histogram


@pytest.fixture(scope="module")
def a6():
    return realization_for(parse_group("A6"))


def test_histogram_deterministic(a6):
    a = sample_order_histogram(a6, 5000, seed=3)
    b = sample_order_histogram(a6, 5000, seed=3)
    assert a == b
    c = sample_order_histogram(a6, 5000, seed=4)
    assert a != c


def test_histogram_depends_only_on_seed_and_threads(a6):
    # the split is part of the contract: same (seed, threads) -> same result
    one = sample_order_histogram(a6, 4001, seed=9, threads=1)
    four = sample_order_histogram(a6, 4001, seed=9, threads=4)
    four_again = sample_order_histogram(a6, 4001, seed=9, threads=4)
    assert four == four_again
    assert sum(one.values()) == sum(four.values()) == 4001


def test_histogram_thread_split_merges_streams(a6):
    # threads=2 must equal the two stream halves summed by hand
    from sgq import _kernels
    from sgq.sampling import DEFAULT_BURNIN, DEFAULT_SLOTS

    merged = sample_order_histogram(a6, 5001, seed=13, threads=2)
    gens = a6.generator_matrix()
    parts: dict[int, int] = {}
    for t, n_t in enumerate((2501, 2500)):
        stream = _kernels.derive_stream_seed(13, t)
        for k, c in _kernels.pr_order_histogram(
            gens, n_t, stream, DEFAULT_SLOTS, DEFAULT_BURNIN
        ).items():
            parts[k] = parts.get(k, 0) + c
    assert merged == parts


def test_sampled_orders_live_in_spectrum(a6, censuses):
    hist = sample_order_histogram(a6, 8000, seed=21)
    assert set(hist) <= set(censuses["A6"].element_orders())


def test_estimate_matches_exact_fraction(a6, censuses):
    # |A6(5)| = 144 of 360; 20k draws pin the estimate well inside 5 sigma
    est = estimate_order_fraction(a6, 5, 20000, seed=17)
    exact = censuses["A6"].count(5) / 360
    assert est.hits == round(est.fraction * est.samples)
    assert abs(est.fraction - exact) < 5 * est.standard_error
    assert 0 < est.standard_error < 0.01


def test_estimate_fields(a6):
    est = estimate_order_fraction(a6, 4, 1000, seed=2, threads=3)
    assert est.label == "A6"
    assert est.order_k == 4
    assert est.samples == 1000
    assert est.seed == 2
    assert est.threads == 3
    assert est.fraction == est.hits / 1000


def test_estimate_zero_hits(a6):
    # A6 has no elements of order 7; the estimate must degrade gracefully
    est = estimate_order_fraction(a6, 7, 500, seed=5)
    assert est.hits == 0
    assert est.fraction == 0.0
    assert est.standard_error == 0.0


def test_parameter_validation(a6):
    with pytest.raises(ParameterDomainError):
        sample_order_histogram(a6, 0, seed=1)
    with pytest.raises(ParameterDomainError):
        sample_order_histogram(a6, 100, seed=1, threads=0)
    with pytest.raises(ParameterDomainError):
        estimate_order_fraction(a6, 0, 100, seed=1)
