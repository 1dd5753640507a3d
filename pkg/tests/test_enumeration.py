from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import TAG23, small_stepsets
from oracles import brute_force_excursions
from qwalk.enumeration import (
    EXACT_CAP,
    count_excursions,
    detect_period,
    drift_check,
    lattice_period,
    walk_counts,
    weighted_excursion_prob,
    weighted_excursion_probs,
)
from qwalk.errors import CapExceeded, HalfPlaneConfined
from qwalk.fixtures import FIXTURES
from qwalk.numsolve import DyadicInterval, eval_rho, solve_critical_point
from qwalk.stepset import KREWERAS, SIMPLE_WALK, StepSet


def test_worked_example_sequence():
    assert count_excursions(TAG23, 8).terms == (1, 0, 2, 1, 10, 14, 75, 178, 738)


def test_diagonal_never_returns():
    assert count_excursions(StepSet(((1, 1),)), 4).terms == (1, 0, 0, 0, 0)


def test_simple_walk_sequence():
    assert count_excursions(SIMPLE_WALK, 6).terms == (1, 0, 2, 0, 10, 0, 70)
    assert tuple(brute_force_excursions(SIMPLE_WALK.steps, 6)) == (1, 0, 2, 0, 10, 0, 70)


def test_exact_cap():
    with pytest.raises(CapExceeded):
        count_excursions(TAG23, EXACT_CAP + 1)


def test_float_mode_rescales():
    exact = count_excursions(TAG23, 40)
    approx = count_excursions(TAG23, 40, mode="float")
    assert not approx.certified and approx.scale == pytest.approx(4.729031538, abs=1e-9)
    for n in (10, 25, 40):
        assert approx.terms[n] * approx.scale ** n == pytest.approx(exact.terms[n], rel=1e-10)


def test_periods():
    assert detect_period(TAG23) == 1
    assert detect_period(SIMPLE_WALK) == 2
    assert lattice_period(KREWERAS) == 3
    assert lattice_period(StepSet(((1, 1),))) is None
    with pytest.raises(HalfPlaneConfined):
        detect_period(StepSet(((1, 1),)))


def test_starred_fixture_has_period_two(fixture_sets):
    s = fixture_sets["7"][0]
    assert count_excursions(s, 8).terms == (1, 0, 1, 0, 4, 0, 29, 0, 230)
    assert detect_period(s) == 2


def test_fixture_periods(fixture_sets):
    for tag, sets in fixture_sets.items():
        for s in sets:
            p = detect_period(s)
            assert (p == 2) == FIXTURES[tag].starred
            if FIXTURES[tag].starred:
                assert all(e == 0 for e in count_excursions(s, 40).terms[1::2])


@settings(max_examples=40)
@given(small_stepsets())
def test_dp_matches_brute_force(s):
    assert list(count_excursions(s, 8).terms) == brute_force_excursions(s.steps, 8)


def test_dp_matches_brute_force_on_fixtures(fixture_one):
    for s in fixture_one.values():
        assert list(count_excursions(s, 10).terms) == brute_force_excursions(s.steps, 10)


@given(small_stepsets())
def test_counts_bounded_and_supported(s):
    n = 7
    seq = count_excursions(s, n).terms
    assert all(0 <= e <= len(s) ** k for k, e in enumerate(seq))
    f = walk_counts(s, n)
    assert f.shape[0] <= n + 1 and f.shape[1] <= n + 1
    assert f[0, 0] == seq[n]
    assert sum(int(v) for v in f.flat) <= len(s) ** n


@given(small_stepsets())
def test_transpose_symmetry(s):
    assert count_excursions(s, 12).terms == count_excursions(s.transpose(), 12).terms


def test_weighted_probability_examples():
    cp = solve_critical_point(SIMPLE_WALK, 64)
    assert Fraction(1, 8) in weighted_excursion_prob(SIMPLE_WALK, cp, 2)
    assert 1 in weighted_excursion_prob(SIMPLE_WALK, cp, 0)
    cp = solve_critical_point(TAG23, 64)
    p4 = weighted_excursion_prob(TAG23, cp, 4)
    rho = eval_rho(TAG23, cp)
    assert (10 / rho ** 4).intersects(p4)
    # 10 / 4.729031538^4 = 0.0199945...
    assert float(p4) == pytest.approx(10 / 4.729031538 ** 4, abs=1e-9)


def test_weighted_identity_up_to_50(fixture_one):
    for tag in ("23", "30", "7"):
        s = fixture_one[tag]
        cp = solve_critical_point(s, 64)
        rho = eval_rho(s, cp)
        probs = weighted_excursion_probs(s, cp, 50)
        exact = count_excursions(s, 50).terms
        for n in range(51):
            assert (DyadicInterval.point(exact[n], rho.prec) / rho ** n).intersects(probs[n]), (tag, n)


def test_drift_vanishes():
    for s in (SIMPLE_WALK, TAG23, KREWERAS):
        ex, ey = drift_check(s, solve_critical_point(s, 64))
        assert ex.contains_zero() and ey.contains_zero()
    ex, ey = drift_check(SIMPLE_WALK, solve_critical_point(SIMPLE_WALK, 64))
    assert ex.width() < Fraction(1, 2 ** 60) and ey.width() < Fraction(1, 2 ** 60)
