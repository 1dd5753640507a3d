"""Acceptance criteria 1-9, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""
import random
import time
from fractions import Fraction

import pytest

from conftest import SMALL, float_counts, record_criterion
from oracles import brute_force_excursions, sturm_count
from qwalk.asymptotics import fit_asymptotics
from qwalk.enumeration import count_excursions, detect_period, weighted_excursion_probs
from qwalk.fixtures import FIXTURES, WORKED_EXAMPLE
from qwalk.irrational import (
    CYCLOTOMIC_SWEEP,
    NO_CONCLUSION,
    NOT_D_FINITE,
    RATIONAL_WITNESS,
    group_order_from_alpha,
    non_dfinite_verdict,
    sweep,
)
from qwalk.bigpoly import parse_poly
from qwalk.numsolve import (
    DyadicInterval,
    alpha_from_c,
    eval_c,
    eval_rho,
    isolate_real_roots,
    solve_critical_point,
    to_decimal,
    within_half_ulp,
)
from qwalk.report import check_tables, recover_fixture_stepsets
from qwalk.stepset import KREWERAS, SIMPLE_WALK, StepSet

FIVE_FIXTURES = ("23", "30", "7", "40", "3")


class Criterion:
    """Context manager recording the outcome of one criterion."""

    def __init__(self, number):
        self.number = number
        self.detail = ""
        self.start = time.perf_counter()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            record_criterion(self.number, True, f"{self.detail} ({elapsed:.1f} s)")
        else:
            record_criterion(self.number, False, f"{exc_type.__name__}: {exc} ({elapsed:.1f} s)")
        return False


def test_criterion_1_sequences():
    with Criterion(1) as cr:
        start = time.perf_counter()
        recovered = recover_fixture_stepsets()
        checked = 0
        for tag, fx in FIXTURES.items():
            for s in recovered[tag]:
                assert count_excursions(s, 8).terms == fx.sequence, tag
                checked += 1
        assert recovered["23"][0] is not None
        assert count_excursions(StepSet(((-1, 0), (0, 1), (1, 0), (1, -1), (0, -1))), 8).terms == (
            1, 0, 2, 1, 10, 14, 75, 178, 738)
        elapsed = time.perf_counter() - start
        assert len(recovered) == 51
        assert elapsed < 5, f"took {elapsed:.1f} s"
        cr.detail = f"51/51 tags, {checked} step sets bit-exact"


def test_criterion_2_constants():
    with Criterion(2) as cr:
        start = time.perf_counter()
        result = check_tables(1)
        elapsed = time.perf_counter() - start
        failed = [r.tag for r in result.rows if not r.passed]
        assert not failed, f"rows failing: {failed}"
        assert result.total == 51
        s = recover_fixture_stepsets()["23"][0]
        cp = solve_critical_point(s)
        assert to_decimal(eval_rho(s, cp)) == "4.729031538"
        assert within_half_ulp(-alpha_from_c(eval_c(s, cp)), "3.320192")
        s30 = recover_fixture_stepsets()["30"][0]
        assert within_half_ulp(-alpha_from_c(eval_c(s30, solve_critical_point(s30))), "2.722859")
        assert elapsed < 120, f"took {elapsed:.1f} s"
        cr.detail = f"{result.passed}/{result.total} rows within half-ulp"


def test_criterion_3_table2():
    with Criterion(3) as cr:
        start = time.perf_counter()
        result = check_tables(2)
        elapsed = time.perf_counter() - start
        failed = [r.tag for r in result.rows if not r.passed]
        assert not failed, f"rows failing: {failed}"
        assert result.total == 51
        assert elapsed < 300, f"took {elapsed:.1f} s"
        cr.detail = f"{result.passed}/{result.total} rows divide and match roots"


def test_criterion_4_certificates():
    with Criterion(4) as cr:
        recovered = recover_fixture_stepsets()
        count = 0
        for tag, sets in recovered.items():
            for s in sets:
                v = non_dfinite_verdict(s)
                assert v.certificate.method == CYCLOTOMIC_SWEEP, tag
                assert v.certificate.irrational and v.conclusion == NOT_D_FINITE, tag
                count += 1
        R = sweep(parse_poly(WORKED_EXAMPLE["mu_c_cleared"])).transformed
        assert R.format("x") == "x^6+2*x^5+6*x^4+5*x^3+6*x^2+2*x+1"
        cr.detail = f"{count} step sets over 51 tags NotDFinite; worked transform bit-exact"


def test_criterion_5_negative_controls():
    with Criterion(5) as cr:
        v = non_dfinite_verdict(SIMPLE_WALK)
        assert v.conclusion == NO_CONCLUSION
        assert v.c.is_exact and v.c.lo == 0
        assert v.alpha_exact == -3
        assert v.certificate.method == RATIONAL_WITNESS and v.certificate.witness[0] == Fraction(1, 2)
        k = non_dfinite_verdict(KREWERAS)
        assert k.conclusion == NO_CONCLUSION
        assert k.alpha_exact == Fraction(-5, 2)
        assert group_order_from_alpha(k.alpha_exact) == 6
        cr.detail = "simple walk c=0, alpha=-3, witness 1/2; Kreweras alpha=-5/2, order 6"


def test_criterion_6_periodicity():
    with Criterion(6) as cr:
        recovered = recover_fixture_stepsets()
        starred = [t for t, fx in FIXTURES.items() if fx.starred]
        assert starred
        for tag in starred:
            for s in recovered[tag]:
                assert detect_period(s) == 2, tag
                assert all(e == 0 for e in count_excursions(s, 60).terms[1::2]), tag
        for tag in set(FIXTURES) - set(starred):
            for s in recovered[tag]:
                assert detect_period(s) == 1, tag
        cr.detail = f"{len(starred)} starred tags with period 2 and zero odd terms"


@pytest.mark.slow
def test_criterion_7_asymptotic_fit():
    with Criterion(7) as cr:
        recovered = recover_fixture_stepsets()
        cases = [("simple walk", SIMPLE_WALK, Fraction(4), Fraction(-3))]
        for tag in ("30", "40", "42"):
            s = recovered[tag][0]
            cp = solve_critical_point(s)
            rho = eval_rho(s, cp)
            assert 5 in rho
            cases.append((f"tag {tag}", s, Fraction(5), alpha_from_c(eval_c(s, cp)).mid()))
        report = []
        for name, s, rho, alpha in cases:
            start = time.perf_counter()
            seq = float_counts(s, 2000)
            fit = fit_asymptotics(seq, float(rho), seq.period)
            elapsed = time.perf_counter() - start
            err = abs(fit.alpha_hat - float(alpha))
            assert err <= 0.05, f"{name}: |alpha_hat - alpha| = {err:.4f}"
            assert elapsed < 120, f"{name} took {elapsed:.1f} s"
            report.append(f"{name} {err:.1e}")
        cr.detail = "N=2000 errors: " + ", ".join(report)


def test_criterion_8_oracles():
    with Criterion(8) as cr:
        rng = random.Random(20240601)
        sets = set()
        while len(sets) < 50:
            k = rng.randint(1, 8)
            sets.add(StepSet(tuple(rng.sample(SMALL, k))))
        for s in sorted(sets, key=lambda s: s.steps):
            assert list(count_excursions(s, 10).terms) == brute_force_excursions(s.steps, 10), s
        recovered = recover_fixture_stepsets()
        polys = 0
        for tag, fx in FIXTURES.items():
            s = recovered[tag][0]
            cp = solve_critical_point(s)
            for mu, target in ((fx.mu_rho, eval_rho(s, cp)), (fx.mu_c, eval_c(s, cp))):
                iso = isolate_real_roots(mu)
                bound = sum(abs(c) for c in mu.coeffs)
                assert len(iso) == sturm_count(mu.coeffs, -bound, bound), tag
                for r in iso:
                    assert r.is_exact or sturm_count(mu.coeffs, r.lo, r.hi) == 1, tag
                # the fixture polynomial evaluated over the certified enclosure contains 0
                acc = target * 0
                for c in reversed(mu.coeffs):
                    acc = acc * target + c
                assert acc.contains_zero(), tag
                polys += 1
        cr.detail = f"50 random sets match brute force to n=10; {polys} table polynomials pass Sturm and enclosure checks"


def test_criterion_9_weighted_identity():
    with Criterion(9) as cr:
        recovered = recover_fixture_stepsets()
        worst = Fraction(0)
        for tag in FIVE_FIXTURES:
            s = recovered[tag][0]
            cp = solve_critical_point(s)
            rho = eval_rho(s, cp)
            probs = weighted_excursion_probs(s, cp, 50)
            exact = count_excursions(s, 50).terms
            for n in range(51):
                ratio = DyadicInterval.point(exact[n], rho.prec) / rho ** n
                gap = abs(ratio.mid() - probs[n].mid())
                width = ratio.width() + probs[n].width()
                assert gap <= width, (tag, n)
                worst = max(worst, width)
        cr.detail = f"5 fixtures, n <= 50, max enclosure width {float(worst):.1e}"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
