"""Certified positive critical point of chi and interval values of rho, c and alpha.

The critical point is the minimiser of the convex function
f(u, v) = chi(e^u, e^v).  A damped Newton iteration in (u, v) locates it in
floating point, Newton in exact dyadic arithmetic sharpens it to the working
precision, and a Krawczyk test on a small box around it proves that the box
holds exactly one zero of the gradient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, HalfPlaneConfined, PrecisionExhausted, ZeroHessianTerm
from ..stepset import char_poly, is_half_plane_confined, partials
from .interval import (
    DEFAULT_PRECISION,
    DyadicInterval,
    arccos_interval,
    pi_interval,
    precision_cap,
    precision_schedule,
)

__all__ = [
    "CriticalPoint",
    "float_critical_point",
    "solve_critical_point",
    "eval_rho",
    "eval_c",
    "alpha_from_c",
]


@dataclass(frozen=True)
class CriticalPoint:
    x0: DyadicInterval
    y0: DyadicInterval
    certified: bool
    bits: int
    convex: bool = True


def float_critical_point(s, tol=1e-15, max_iter=200):
    """Damped Newton on the gradient of chi(e^u, e^v), started at the origin; returns (x, y)."""
    steps = s.steps
    u = v = 0.0

    def grad_hess(u, v):
        g1 = g2 = h11 = h12 = h22 = 0.0
        for i, j in steps:
            w = math.exp(i * u + j * v)
            g1 += i * w
            g2 += j * w
            h11 += i * i * w
            h12 += i * j * w
            h22 += j * j * w
        return g1, g2, h11, h12, h22

    for _ in range(max_iter):
        g1, g2, h11, h12, h22 = grad_hess(u, v)
        gn = math.hypot(g1, g2)
        if gn < tol:
            break
        det = h11 * h22 - h12 * h12
        if det <= 0:
            du, dv = -g1, -g2
        else:
            du = -(h22 * g1 - h12 * g2) / det
            dv = -(-h12 * g1 + h11 * g2) / det
        lam = 1.0
        while lam > 1e-12:
            n1, n2, *_ = grad_hess(u + lam * du, v + lam * dv)
            if math.hypot(n1, n2) < gn:
                break
            lam /= 2
        u += lam * du
        v += lam * dv
    return math.exp(u), math.exp(v)


def _round_dyadic(q, bits):
    scale = 1 << bits
    return Fraction(round(q * scale), scale)


def _gradient_q(steps, x, y):
    """(sum i x^i y^j, sum j x^i y^j) and its Jacobian in (x, y), exactly."""
    g1 = g2 = j11 = j12 = j21 = j22 = Fraction(0)
    for i, j in steps:
        w = x ** i * y ** j
        g1 += i * w
        g2 += j * w
        j11 += i * i * w / x
        j12 += i * j * w / y
        j21 += i * j * w / x
        j22 += j * j * w / y
    return (g1, g2), ((j11, j12), (j21, j22))


def _refine_exact(steps, x, y, bits):
    x, y = Fraction(x), Fraction(y)
    eps = Fraction(1, 2 ** (bits + 4))
    for _ in range(64):
        (g1, g2), ((a, b), (c, d)) = _gradient_q(steps, x, y)
        det = a * d - b * c
        dx = (d * g1 - b * g2) / det
        dy = (-c * g1 + a * g2) / det
        x = _round_dyadic(x - dx, bits + 8)
        y = _round_dyadic(y - dy, bits + 8)
        if abs(dx) < eps and abs(dy) < eps:
            break
    return x, y


def _iv_power(base, inv, k, one):
    if k == 0:
        return one
    return base ** k if k > 0 else inv ** (-k)


def _gradient_iv(steps, X, Y, prec):
    """Interval gradient and Jacobian of (sum i x^i y^j, sum j x^i y^j) over the box X x Y."""
    one = DyadicInterval(1, 1, 0, prec)
    Xi, Yi = X.reciprocal(), Y.reciprocal()
    zero = DyadicInterval(0, 0, 0, prec)
    g1 = g2 = j11 = j12 = j21 = j22 = zero
    for i, j in steps:
        w = _iv_power(X, Xi, i, one) * _iv_power(Y, Yi, j, one)
        g1 = g1 + w * i
        g2 = g2 + w * j
        if i:
            wx = _iv_power(X, Xi, i - 1, one) * _iv_power(Y, Yi, j, one)
            j11 = j11 + wx * (i * i)
            j21 = j21 + wx * (i * j)
        if j:
            wy = _iv_power(X, Xi, i, one) * _iv_power(Y, Yi, j - 1, one)
            j12 = j12 + wy * (i * j)
            j22 = j22 + wy * (j * j)
    return (g1, g2), ((j11, j12), (j21, j22))


def _hessian_uv_pd(steps, X, Y, prec):
    """Convexity witness: the (u, v) Hessian of chi(e^u, e^v) is positive definite on the box."""
    one = DyadicInterval(1, 1, 0, prec)
    Xi, Yi = X.reciprocal(), Y.reciprocal()
    zero = DyadicInterval(0, 0, 0, prec)
    h11 = h12 = h22 = zero
    for i, j in steps:
        w = _iv_power(X, Xi, i, one) * _iv_power(Y, Yi, j, one)
        h11 = h11 + w * (i * i)
        h12 = h12 + w * (i * j)
        h22 = h22 + w * (j * j)
    return h11.is_positive() and (h11 * h22 - h12 * h12).is_positive()


def _krawczyk(steps, mx, my, radius, prec):
    """Return the contracted box (X, Y) if the Krawczyk test succeeds, else None."""
    X = DyadicInterval.from_bounds(mx - radius, mx + radius, prec)
    Y = DyadicInterval.from_bounds(my - radius, my + radius, prec)
    if not (X.is_positive() and Y.is_positive()):
        return None
    mX = DyadicInterval.point(mx, prec)
    mY = DyadicInterval.point(my, prec)
    (g1, g2), _ = _gradient_iv(steps, mX, mY, prec)
    _, ((a, b), (c, d)) = _gradient_iv(steps, X, Y, prec)
    # preconditioner: approximate inverse of the Jacobian at the midpoint
    (_, _), ((pa, pb), (pc, pd)) = _gradient_q(steps, mx, my)
    det = pa * pd - pb * pc
    if det == 0:
        return None
    C = [[pd / det, -pb / det], [-pc / det, pa / det]]
    C = [[DyadicInterval.point(_round_dyadic(v, prec), prec) for v in row] for row in C]
    dX, dY = X - mX, Y - mY
    cg1 = C[0][0] * g1 + C[0][1] * g2
    cg2 = C[1][0] * g1 + C[1][1] * g2
    m11 = 1 - (C[0][0] * a + C[0][1] * c)
    m12 = -(C[0][0] * b + C[0][1] * d)
    m21 = -(C[1][0] * a + C[1][1] * c)
    m22 = 1 - (C[1][0] * b + C[1][1] * d)
    KX = mX - cg1 + m11 * dX + m12 * dY
    KY = mY - cg2 + m21 * dX + m22 * dY
    if X.interior_contains(KX) and Y.interior_contains(KY):
        return KX, KY
    return None


@lru_cache(maxsize=512)
def _solve_at(s, bits):
    steps = s.steps
    fx, fy = float_critical_point(s)
    x, y = _refine_exact(steps, _round_dyadic(Fraction(fx), 60), _round_dyadic(Fraction(fy), 60), bits)
    prec = bits + 32
    radius = Fraction(1, 2 ** (bits // 2))
    box = _krawczyk(steps, x, y, radius, prec)
    if box is None:
        return None
    X, Y = box
    return CriticalPoint(X, Y, True, bits, _hessian_uv_pd(steps, X, Y, prec))


def solve_critical_point(s, bits=DEFAULT_PRECISION):
    """Certified enclosure of the unique positive zero of (d chi/dx, d chi/dy)."""
    witness = is_half_plane_confined(s)
    if witness is not None:
        raise HalfPlaneConfined(witness)
    cap = precision_cap()
    for b in precision_schedule(bits, cap):
        cp = _solve_at(s, b)
        if cp is not None:
            return cp
    raise PrecisionExhausted("critical point certification failed up to the precision cap")


def _prec(cp):
    return cp.bits + 32


def eval_rho(s, cp):
    """Enclosure of rho = chi(x0, y0)."""
    one = DyadicInterval(1, 1, 0, _prec(cp))
    return char_poly(s).evaluate(cp.x0, cp.y0, one)


def eval_c(s, cp):
    """Enclosure of c = chi_xy / sqrt(chi_xx * chi_yy) at the critical point, clipped to [-1, 1]."""
    prec = _prec(cp)
    one = DyadicInterval(1, 1, 0, prec)
    d = partials(char_poly(s))
    if not d.chi_xx or not d.chi_yy:
        raise ZeroHessianTerm("a pure second partial of chi vanishes identically")
    mixed = d.chi_xy.evaluate(cp.x0, cp.y0, one)
    prod = d.chi_xx.evaluate(cp.x0, cp.y0, one) * d.chi_yy.evaluate(cp.x0, cp.y0, one)
    if not prod.is_positive():
        raise ZeroHessianTerm("cannot certify chi_xx * chi_yy > 0 at the critical point")
    c = mixed / prod.sqrt()
    clipped = c.intersect(DyadicInterval(-1, 1, 0, prec))
    if clipped is None:
        raise DomainError("correlation enclosure misses [-1, 1]")
    return clipped


def alpha_from_c(c):
    """Enclosure of alpha = -1 - pi / arccos(-c)."""
    if c.lo_q <= -1:
        raise DomainError("c may equal -1, where arccos(-c) vanishes")
    a = arccos_interval(-c)
    try:
        return -1 - pi_interval(c.prec) / a
    except ZeroDivisionError as exc:
        raise DomainError("arccos(-c) enclosure touches zero") from exc
