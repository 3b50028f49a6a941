"""Shared fixtures: parsed descriptors and session-cached censuses.

Censuses are exact and deterministic, so caching them per session keeps
the suite fast without risking cross-test interference.
"""

from __future__ import annotations

import pytest

from sgq import parse_group
from sgq.census import census_of

# every group small enough to enumerate in well under a second
CENSUSED = (
    "A5", "A6", "A7", "A8", "A9", "A10",
    "L2(7)", "L2(8)", "L2(11)", "L3(4)", "S4(3)",
    "M11", "M12", "J2",
)


@pytest.fixture(scope="session")
def censuses():
    return {token: census_of(parse_group(token)) for token in CENSUSED}


@pytest.fixture(scope="session")
def catalog_small():
    from sgq import enumerate_catalog

    return enumerate_catalog(10**6)
