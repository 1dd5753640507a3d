import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qwalk.enumeration import count_excursions  # noqa: E402
from qwalk.report import recover_fixture_stepsets  # noqa: E402
from qwalk.stepset import StepSet  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL = [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0)]
TAG23 = StepSet(((-1, 0), (0, 1), (1, 0), (1, -1), (0, -1)))


def small_stepsets(min_size=1):
    return st.sets(st.sampled_from(SMALL), min_size=min_size).map(lambda xs: StepSet(tuple(xs)))


@pytest.fixture(scope="session")
def fixture_sets():
    return recover_fixture_stepsets()


@pytest.fixture(scope="session")
def fixture_one(fixture_sets):
    """One representative step set per tag."""
    return {tag: sets[0] for tag, sets in fixture_sets.items()}


@lru_cache(maxsize=None)
def float_counts(s, n_max):
    """Float excursion counts shared by the fitting tests; each long run takes seconds."""
    return count_excursions(s, n_max, mode="float")


ACCEPTANCE = {}


def record_criterion(number, passed, detail):
    ACCEPTANCE[number] = (passed, detail)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
