"""Dyadic interval arithmetic with outward rounding, plus pi and arccos enclosures.

An interval is stored as two integer mantissas sharing one binary exponent:
``[lo * 2**exp, hi * 2**exp]``.  After each operation mantissas are cut back
to ``prec`` bits, rounding ``lo`` down and ``hi`` up, so every result
encloses the exact real result of the operation on any points of the inputs.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import DomainError

__all__ = [
    "DyadicInterval",
    "DEFAULT_PRECISION",
    "precision_cap",
    "precision_schedule",
    "pi_interval",
    "atan_interval",
    "arccos_interval",
    "to_decimal",
    "within_half_ulp",
]

DEFAULT_PRECISION = 64
_DEFAULT_CAP = 4096


def precision_cap():
    """Precision cap in bits; the QWALK_PRECISION_CAP environment variable overrides 4096."""
    raw = os.environ.get("QWALK_PRECISION_CAP")
    if raw:
        try:
            return max(DEFAULT_PRECISION, int(raw))
        except ValueError:
            pass
    return _DEFAULT_CAP


def precision_schedule(start=DEFAULT_PRECISION, cap=None):
    """Doubling precisions from ``start`` up to and including the cap."""
    cap = precision_cap() if cap is None else cap
    bits = max(16, start)
    out = []
    while bits < cap:
        out.append(bits)
        bits *= 2
    out.append(cap)
    return out


def _floor_shift(m, k):
    return m >> k


def _ceil_shift(m, k):
    return -((-m) >> k)


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, float)):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an interval")


class DyadicInterval:
    """Closed interval with dyadic endpoints and outward rounding at ``prec`` bits."""

    __slots__ = ("lo", "hi", "exp", "prec")

    def __init__(self, lo, hi, exp=0, prec=DEFAULT_PRECISION):
        if lo > hi:
            raise ValueError("empty interval")
        bl = max(abs(lo), abs(hi)).bit_length()
        if bl > prec:
            k = bl - prec
            lo = _floor_shift(lo, k)
            hi = _ceil_shift(hi, k)
            exp += k
        self.lo = lo
        self.hi = hi
        self.exp = exp
        self.prec = prec

    # -- construction -----------------------------------------------------
    @classmethod
    def point(cls, v, prec=DEFAULT_PRECISION):
        """Smallest enclosure of the rational ``v`` at ``prec`` bits."""
        v = _as_fraction(v)
        n, d = v.numerator, v.denominator
        if d & (d - 1) == 0:
            e = -(d.bit_length() - 1)
            return cls(n, n, e, prec)
        k = prec + d.bit_length() - min(abs(n).bit_length(), d.bit_length()) + 2
        lo = (n << k) // d
        hi = -((-n << k) // d)
        return cls(lo, hi, -k, prec)

    @classmethod
    def from_bounds(cls, lo, hi, prec=DEFAULT_PRECISION):
        a = cls.point(lo, prec)
        b = cls.point(hi, prec)
        return a.hull(b)

    def with_prec(self, prec):
        return DyadicInterval(self.lo, self.hi, self.exp, prec)

    # -- views ------------------------------------------------------------
    @property
    def lo_q(self):
        return Fraction(self.lo) * Fraction(2) ** self.exp

    @property
    def hi_q(self):
        return Fraction(self.hi) * Fraction(2) ** self.exp

    def mid(self):
        return (self.lo_q + self.hi_q) / 2

    def width(self):
        return Fraction(self.hi - self.lo) * Fraction(2) ** self.exp

    def __float__(self):
        return float(self.mid())

    def is_point(self):
        return self.lo == self.hi

    def contains(self, v):
        if isinstance(v, DyadicInterval):
            return self.lo_q <= v.lo_q and v.hi_q <= self.hi_q
        v = _as_fraction(v)
        return self.lo_q <= v <= self.hi_q

    def __contains__(self, v):
        return self.contains(v)

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def is_positive(self):
        return self.lo > 0

    def is_negative(self):
        return self.hi < 0

    def interior_contains(self, other):
        return self.lo_q < other.lo_q and other.hi_q < self.hi_q

    def intersects(self, other):
        return not (self.hi_q < other.lo_q or other.hi_q < self.lo_q)

    def intersect(self, other):
        lo = max(self.lo_q, other.lo_q)
        hi = min(self.hi_q, other.hi_q)
        if lo > hi:
            return None
        return DyadicInterval.from_bounds(lo, hi, max(self.prec, other.prec))

    def hull(self, other):
        e = min(self.exp, other.exp)
        a = (self.lo << (self.exp - e), self.hi << (self.exp - e))
        b = (other.lo << (other.exp - e), other.hi << (other.exp - e))
        return DyadicInterval(min(a[0], b[0]), max(a[1], b[1]), e, max(self.prec, other.prec))

    def __repr__(self):
        return f"DyadicInterval[{float(self.lo_q)!r}, {float(self.hi_q)!r}]"

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, DyadicInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return DyadicInterval.point(other, self.prec)
        return NotImplemented

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo, self.exp, self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return DyadicInterval(0, max(-self.lo, self.hi), self.exp, self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = min(self.exp, other.exp)
        s1, s2 = self.exp - e, other.exp - e
        return DyadicInterval(
            (self.lo << s1) + (other.lo << s2),
            (self.hi << s1) + (other.hi << s2),
            e,
            max(self.prec, other.prec),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a >= 0 and c >= 0:
            lo, hi = a * c, b * d
        else:
            p = (a * c, a * d, b * c, b * d)
            lo, hi = min(p), max(p)
        return DyadicInterval(lo, hi, self.exp + other.exp, max(self.prec, other.prec))

    __rmul__ = __mul__

    def reciprocal(self):
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval division by an interval containing zero")
        if self.hi < 0:
            return -((-self).reciprocal())
        k = self.prec + self.hi.bit_length() + 2
        one = 1 << k
        lo = one // self.hi
        hi = -((-one) // self.lo)
        return DyadicInterval(lo, hi, -k - self.exp, self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self ** (-n)).reciprocal()
        if n == 0:
            return DyadicInterval(1, 1, 0, self.prec)
        if n % 2 == 0 and self.lo < 0 < self.hi:
            m = abs(self) ** n
            return DyadicInterval(0, m.hi, m.exp, self.prec)
        if self.lo >= 0 or n % 2 == 1:
            # monotone on the interval (odd powers, or nonnegative base)
            lo = DyadicInterval(self.lo, self.lo, self.exp, self.prec)
            hi = DyadicInterval(self.hi, self.hi, self.exp, self.prec)
            plo, phi = lo, hi
            for _ in range(n - 1):
                plo = plo * lo
                phi = phi * hi
            return plo.hull(phi)
        return (-self) ** n

    def sqrt(self):
        if self.lo < 0:
            raise DomainError("square root of an interval with negative part")
        lo, hi, e = self.lo, self.hi, self.exp
        if e % 2:
            lo, hi, e = lo << 1, hi << 1, e - 1
        k = self.prec + 2
        L, H = lo << (2 * k), hi << (2 * k)
        r_lo = isqrt(L)
        r_hi = isqrt(H)
        if r_hi * r_hi < H:
            r_hi += 1
        return DyadicInterval(r_lo, r_hi, (e - 2 * k) // 2, self.prec)


# ---------------------------------------------------------------------------
# pi and arctangent
# ---------------------------------------------------------------------------

def _atan_inv_fixed(n, k):
    """Fixed-point sum approximating 2**k * atan(1/n) and an error bound in units."""
    power = (1 << k) // n
    n2 = n * n
    total = 0
    terms = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j % 2 else term
        power //= n2
        j += 1
        terms += 1
    # each truncated term is off by less than 2 units; the tail is below 1 unit
    return total, 2 * terms + 2


@lru_cache(maxsize=64)
def pi_interval(prec=DEFAULT_PRECISION):
    """Enclosure of pi by Machin's formula pi = 16 atan(1/5) - 4 atan(1/239)."""
    k = prec + 16
    a5, e5 = _atan_inv_fixed(5, k)
    a239, e239 = _atan_inv_fixed(239, k)
    s = 16 * a5 - 4 * a239
    err = 16 * e5 + 4 * e239
    return DyadicInterval(s - err, s + err, -k, prec)


def atan_interval(w):
    """Enclosure of atan over a nonnegative interval ``w``.

    Argument halving atan(w) = 2 atan(w / (1 + sqrt(1 + w^2))) brings w below
    2^-8, then the alternating Taylor series is summed with its first omitted
    term as the error bound.
    """
    if w.lo < 0:
        raise DomainError("atan_interval expects a nonnegative argument")
    prec = w.prec
    halvings = 0
    small = Fraction(1, 256)
    while w.hi_q > small:
        w = w / (1 + (1 + w * w).sqrt())
        halvings += 1
    w2 = w * w
    total = DyadicInterval(0, 0, 0, prec)
    power = w
    k = 0
    eps = Fraction(1, 2 ** (prec + 8))
    while True:
        term = power / (2 * k + 1)
        total = total + term if k % 2 == 0 else total - term
        power = power * w2
        k += 1
        bound = power.hi_q / (2 * k + 1)
        if bound < eps or power.hi == 0:
            break
    tail = DyadicInterval.from_bounds(-bound, bound, prec)
    return (total + tail) * (1 << halvings)


def _arccos_point(v, prec):
    if v == -1:
        return pi_interval(prec)
    if v == 1:
        return DyadicInterval(0, 0, 0, prec)
    x = DyadicInterval.point(v, prec)
    w = ((1 - x) / (1 + x)).sqrt()
    return atan_interval(w) * 2


def arccos_interval(x):
    """Enclosure of arccos on ``x`` (intersected with [-1, 1]); arccos is decreasing."""
    prec = x.prec
    lo = max(x.lo_q, Fraction(-1))
    hi = min(x.hi_q, Fraction(1))
    if lo > hi:
        raise DomainError("arccos argument outside [-1, 1]")
    a = _arccos_point(hi, prec)
    b = _arccos_point(lo, prec)
    return a.hull(b)


# ---------------------------------------------------------------------------
# decimal output
# ---------------------------------------------------------------------------

def _round_sig(v, digits):
    """Round a Fraction to ``digits`` significant digits; returns (int mantissa, exponent10)."""
    if v == 0:
        return 0, -(digits - 1)
    a = abs(v)
    e = len(str(a.numerator)) - len(str(a.denominator))
    if Fraction(10) ** e > a:
        e -= 1
    elif Fraction(10) ** (e + 1) <= a:
        e += 1
    shift = digits - 1 - e
    scaled = v * Fraction(10) ** shift
    m = round(scaled)
    if abs(m) >= 10 ** digits:
        m = round(v * Fraction(10) ** (shift - 1))
        shift -= 1
    return m, -shift


def _format_decimal(m, e10):
    sign = "-" if m < 0 else ""
    ds = str(abs(m))
    if e10 >= 0:
        return sign + ds + "0" * e10
    point = len(ds) + e10
    if point > 0:
        return sign + ds[:point] + "." + ds[point:]
    return sign + "0." + "0" * (-point) + ds


def to_decimal(iv, digits=10):
    """Decimal with ``digits`` significant digits when both endpoints agree, else None."""
    if iv.lo == 0 and iv.hi == 0:
        return "0." + "0" * (digits - 1)
    a = _round_sig(iv.lo_q, digits)
    b = _round_sig(iv.hi_q, digits)
    if a != b:
        return None
    return _format_decimal(*a)


def within_half_ulp(iv, text):
    """True when the whole enclosure lies within half a unit of the last printed digit of ``text``."""
    value = Fraction(text)
    frac = text.split(".")[1] if "." in text else ""
    half = Fraction(1, 2 * 10 ** len(frac))
    return value - half <= iv.lo_q and iv.hi_q <= value + half
