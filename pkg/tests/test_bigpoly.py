from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from conftest import TAG23
from oracles import naive_gcd_degree, raw_double_cover, sylvester_resultant
from qwalk.bigpoly import (
    IntPoly,
    MPoly,
    chebyshev_double_cover,
    cyclotomic,
    cyclotomic_candidates,
    divides,
    gcd_poly,
    minpoly_two_cos,
    parse_poly,
    resultant,
    squarefree_part,
    totients,
)
from qwalk.errors import DivisionByZeroPoly, InexactDivision
from qwalk.fixtures import FIXTURES
from qwalk.stepset import char_poly, partials

T = IntPoly.x()

coeff_lists = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


def P(text):
    return parse_poly(text)


# -- IntPoly basics ---------------------------------------------------------

def test_parse_and_format_roundtrip():
    p = P("t^3+t^2-18*t-43")
    assert p.coeffs == (-43, -18, 1, 1)
    assert p.format() == "t^3+t^2-18*t-43"


def test_parse_clears_rational_coefficients():
    assert P("t^3+t^2+3/4*t+1/8") == IntPoly((1, 6, 8, 8))
    assert P("t+1/4") == IntPoly((1, 4))


def test_exact_division():
    q = P("t^3+t^2-18*t-43")
    p = (T + 1) * q
    assert p.exact_div(q) == T + 1
    with pytest.raises(InexactDivision):
        p.exact_div(T - 5)


@given(coeff_lists, coeff_lists)
def test_ring_identities(a, b):
    p, q = IntPoly(a), IntPoly(b)
    for v in (-2, 0, 3):
        assert (p * q)(v) == p(v) * q(v)
        assert (p + q)(v) == p(v) + q(v)
        assert (p - q)(v) == p(v) - q(v)


# -- gcd, divides, squarefree -------------------------------------------------

def test_squarefree_example():
    assert squarefree_part((T + 1) ** 2 * (T - 2)) == ((T + 1) * (T - 2)).canonical()


def test_divides_example():
    q = P("t^3+t^2-18*t-43")
    assert divides(q, (T + 1) * q)
    assert not divides(T - 5, (T + 1) * q)
    with pytest.raises(DivisionByZeroPoly):
        divides(IntPoly(), q)


def test_gcd_example():
    assert gcd_poly(T ** 2 - 1, T ** 2 - 2 * T + 1) == T - 1


@given(coeff_lists)
def test_squarefree_has_trivial_gcd_with_derivative(a):
    p = IntPoly(a)
    assume(p.degree >= 1)
    sq = squarefree_part(p * p)
    assert gcd_poly(sq, sq.derivative()).degree == 0
    assert divides(sq, p) and divides(p, sq ** p.degree)


@given(coeff_lists, coeff_lists)
def test_gcd_matches_euclid_over_q(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assume(p.degree >= 0 and q.degree >= 0)
    assert gcd_poly(p, q).degree == naive_gcd_degree(p.coeffs, q.coeffs)


# -- resultants ---------------------------------------------------------------

def test_resultant_eliminates_y():
    v = ("x", "y")
    x, y = MPoly.gen("x", v), MPoly.gen("y", v)
    r = resultant(y - x ** 2, y - 1, "y")
    assert r.vars == ("x",)
    assert r.canonical().format() == "x^2-1"


def test_resultant_square_factor():
    v = ("x", "t")
    x, t = MPoly.gen("x", v), MPoly.gen("t", v)
    r = resultant(x ** 2 - 2, x ** 2 - t, "x")
    assert r.to_intpoly() == (T - 2) ** 2


def test_resultant_of_worked_partials_has_x0_root():
    d = partials(char_poly(TAG23))
    r = resultant(d.chi_x, d.chi_y, "y").to_intpoly()
    assert r
    # sign change around x0 ~ 0.75488
    assert r(Fraction(754, 1000)) * r(Fraction(755, 1000)) < 0


@given(coeff_lists, coeff_lists)
def test_resultant_matches_sylvester(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assume(p.degree >= 1 and q.degree >= 1)
    assert resultant(p, q) == sylvester_resultant(list(p.coeffs), list(q.coeffs))


@given(coeff_lists, coeff_lists, st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_resultant_zero_iff_common_factor(a, b, c):
    common = IntPoly(c)
    p, q = IntPoly(a) * common, IntPoly(b) * common
    assume(p.degree >= 1 and q.degree >= 1)
    shared = gcd_poly(p, q).degree > 0
    assert (resultant(p, q) == 0) == shared


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=5),
       st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=5),
       st.integers(-3, 3))
def test_multivariate_resultant_commutes_with_evaluation(ta, tb, x_val):
    v = ("x", "y")
    p = MPoly(v, {})
    q = MPoly(v, {})
    for i, j, c in ta:
        p = p + MPoly(v, {(i, j): c})
    for i, j, c in tb:
        q = q + MPoly(v, {(i, j): c})
    assume(p.degree("y") >= 1 and q.degree("y") >= 1)
    r = resultant(p, q, "y")
    pa, qa = p.eval_at("x", x_val), q.eval_at("x", x_val)
    # evaluation commutes with the resultant when leading coefficients survive
    assume(pa.degree("y") == p.degree("y") and qa.degree("y") == q.degree("y"))
    expected = sylvester_resultant(list(pa.to_intpoly().coeffs), list(qa.to_intpoly().coeffs))
    assert r.eval_at("x", x_val).to_int() == expected


# -- cyclotomic machinery -----------------------------------------------------

def test_cyclotomic_examples():
    assert cyclotomic(1) == T - 1
    assert cyclotomic(6) == T ** 2 - T + 1
    phi105 = cyclotomic(105)
    assert phi105.degree == 48
    assert -2 in phi105.coeffs


def test_cyclotomic_product_identity():
    for n in range(1, 61):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == T ** n - 1


def test_cyclotomic_degrees():
    phi = totients(200)
    for n in range(1, 201):
        assert cyclotomic(n).degree == phi[n]
        if n >= 3:
            assert minpoly_two_cos(n).degree == phi[n] // 2


def test_cyclotomic_candidates_examples():
    assert cyclotomic_candidates(1) == [1, 2]
    assert cyclotomic_candidates(2) == [1, 2, 3, 4, 6]


def test_cyclotomic_candidates_degree_30():
    # the textbook bound for degree <= 30 is N <= 150; the exact maximum is 90
    cands = cyclotomic_candidates(30)
    phi = totients(1000)
    assert cands == [n for n in range(1, 1001) if phi[n] <= 30]
    assert max(cands) <= 150
    assert max(cands) == 90


def test_double_cover_examples():
    assert chebyshev_double_cover(P("8*t^3+8*t^2+6*t+1")) == parse_poly("x^6+2*x^5+6*x^4+5*x^3+6*x^2+2*x+1", "x")
    assert chebyshev_double_cover(2 * T - 1) == cyclotomic(6)
    assert chebyshev_double_cover(T) == cyclotomic(4)


def test_minpoly_two_cos_examples():
    assert minpoly_two_cos(5) == T ** 2 + T - 1
    assert minpoly_two_cos(6) == T - 1
    assert minpoly_two_cos(12) == T ** 2 - 3
    assert minpoly_two_cos(7) == T ** 3 + T ** 2 - 2 * T - 1


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5),
       st.fractions(min_value=-4, max_value=4, max_denominator=7))
def test_double_cover_roots(a, z):
    p = IntPoly(a)
    assume(p.degree >= 1 and z != 0)
    R = chebyshev_double_cover(p)
    w = (z * z + 1) / (2 * z)
    assert (R(z) == 0) == (p(w) == 0)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5))
def test_double_cover_palindromic(a):
    p = IntPoly(a)
    assume(p.degree >= 1)
    R = chebyshev_double_cover(p)
    # x^(2d) R(1/x) = +-R, read off the raw transform whose degree is exactly 2d
    raw = IntPoly(raw_double_cover(list(p.coeffs)))
    assert raw.canonical() == R
    padded = list(raw.coeffs) + [0] * (2 * p.degree + 1 - len(raw.coeffs))
    rev = IntPoly(tuple(reversed(padded)))
    assert rev == raw or rev == -raw


def test_fixture_mu_c_transform_has_large_coefficient():
    # the cleared transform (2x)^d mu_c((x^2 + 1) / (2x)) is never cyclotomic: some |coeff| >= 3
    for tag, fx in FIXTURES.items():
        raw = raw_double_cover(list(fx.mu_c.coeffs))
        assert len(raw) - 1 == 2 * fx.mu_c.degree <= 28, tag
        assert max(abs(c) for c in raw) >= 3, tag
        assert chebyshev_double_cover(fx.mu_c).degree == 2 * fx.mu_c.degree


def test_primitive_transform_of_linear_mu_c_is_not_monic():
    # for mu_c = 4t -+ 1 the primitive transform is 2x^2 -+ x + 2: small coefficients but not monic
    for tag in ("30", "40", "42"):
        R = chebyshev_double_cover(FIXTURES[tag].mu_c)
        assert max(abs(c) for c in R.coeffs) == 2
        assert R.lc == 2


def test_content_and_gcd_helpers():
    p = IntPoly((6, 12, -18))
    assert p.content() == 6
    assert p.primitive() == IntPoly((1, 2, -3))
    assert p.canonical() == IntPoly((-1, -2, 3))
    assert gcd(*IntPoly((4, 8)).coeffs) == 4
