"""Shared fixtures: the three classic inscriptions of 25.

A is the economical one (two tens counters, one five-unit counter on the
units), B spells the units as five one-unit counters, C splits 25 as
10 + 15 with everything the units rod can hold.
"""

import pytest

from suanpan.core import AbacusConfig


@pytest.fixture
def inscription_a() -> AbacusConfig:
    return AbacusConfig.of((0, 1), (2, 0))


@pytest.fixture
def inscription_b() -> AbacusConfig:
    return AbacusConfig.of((5, 0), (2, 0))


@pytest.fixture
def inscription_c() -> AbacusConfig:
    return AbacusConfig.of((5, 2), (1, 0))
