"""Runs every randomized property suite at a fixed seed and checks the
instance counts, so a silently skipped suite cannot go unnoticed."""

import pytest

from prop_suites import ALL_SUITES

SEED = 20260823


@pytest.mark.parametrize("name", sorted(ALL_SUITES))
def test_property_suite(name):
    ran = ALL_SUITES[name](SEED)
    assert ran == 200
