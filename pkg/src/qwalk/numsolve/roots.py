"""Real root isolation (Descartes rule of signs with bisection) and algebraic numbers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..bigpoly import IntPoly, squarefree_part
from ..errors import AmbiguousRoot, NoMatchingRoot, PrecisionExhausted
from .interval import DEFAULT_PRECISION, DyadicInterval, precision_cap, precision_schedule

__all__ = ["AlgebraicNumber", "isolate_real_roots", "match_root", "descartes_count", "sign_at"]


def sign_at(p, v):
    """Exact sign of p at a rational point."""
    v = Fraction(v)
    num, den = v.numerator, v.denominator
    acc = 0
    dpow = 1
    for a in reversed(p.coeffs):
        acc = acc * num + a * dpow
        dpow *= den
    # acc = den^deg * p(v) with den > 0
    return (acc > 0) - (acc < 0)


def _sign_variations(coeffs):
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_count(p, a, b):
    """Sign variations of p on the open interval (a, b): an upper bound on the
    number of roots there, exact when it is 0 or 1."""
    a, b = Fraction(a), Fraction(b)
    n = p.degree
    den = a.denominator * b.denominator
    A = a.numerator * b.denominator
    H = b.numerator * a.denominator - A
    # D^n * p((A + H x) / D) by Horner, as an integer coefficient list
    coeffs = p.coeffs
    r = [coeffs[n]]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        nr = [0] * (len(r) + 1)
        for j, c in enumerate(r):
            nr[j] += c * A
            nr[j + 1] += c * H
        nr[0] += coeffs[i] * dpow
        r = nr
    # (x + 1)^n q(1 / (x + 1)): reverse, then Taylor shift by 1
    c = list(reversed(r))
    m = len(c) - 1
    for i in range(m):
        for j in range(m - 1, i - 1, -1):
            c[j] += c[j + 1]
    return _sign_variations(c)


def _root_bound(p):
    """Power of two strictly above every root modulus (Cauchy bound)."""
    lc = abs(p.lc)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    bound = 1 + Fraction(m, lc)
    k = 0
    while Fraction(2) ** k <= bound:
        k += 1
    return Fraction(2) ** k


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real root of a squarefree integer polynomial, pinned by an isolating interval.

    ``lo == hi`` means the root is exactly that rational; otherwise the root
    is the unique one in the open interval (lo, hi) and the polynomial takes
    nonzero values of opposite signs at lo and hi.
    """

    annihilator: IntPoly
    lo: Fraction
    hi: Fraction

    @property
    def is_exact(self):
        return self.lo == self.hi

    def width(self):
        return self.hi - self.lo

    def refine(self, bits):
        """Bisect until the isolating interval is at most 2^-bits wide."""
        if self.is_exact:
            return self
        p = self.annihilator
        lo, hi = self.lo, self.hi
        s_lo = sign_at(p, lo)
        target = Fraction(1, 2 ** bits)
        while hi - lo > target:
            mid = (lo + hi) / 2
            s = sign_at(p, mid)
            if s == 0:
                return AlgebraicNumber(p, mid, mid)
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        return AlgebraicNumber(p, lo, hi)

    def interval(self, prec=DEFAULT_PRECISION):
        return DyadicInterval.from_bounds(self.lo, self.hi, prec)

    def enclosure(self, bits):
        """Dyadic enclosure of width about 2^-bits."""
        return self.refine(bits).interval(bits + 16)

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def sign(self):
        if self.is_exact:
            return (self.lo > 0) - (self.lo < 0)
        if self.lo >= 0:
            return 1
        if self.hi <= 0:
            return -1
        s0 = sign_at(self.annihilator, 0)
        if s0 == 0:
            return 0
        return 1 if s0 == sign_at(self.annihilator, self.lo) else -1


def isolate_real_roots(p):
    """Disjoint isolating intervals for every real root of ``p``, in increasing order.

    The polynomial is made squarefree first.  Roots that happen to be hit
    exactly by a bisection point are returned as point intervals.
    """
    if not p or p.degree < 1:
        return []
    q = squarefree_part(p)
    out = []
    if q.coeffs[0] == 0:
        out.append(AlgebraicNumber(q, Fraction(0), Fraction(0)))
    bound = _root_bound(q)
    stack = [(Fraction(0), bound), (-bound, Fraction(0))]
    found = []
    while stack:
        a, b = stack.pop()
        v = descartes_count(q, a, b)
        if v == 0:
            continue
        if v == 1 and sign_at(q, a) != 0 and sign_at(q, b) != 0:
            found.append(AlgebraicNumber(q, a, b))
            continue
        mid = (a + b) / 2
        if sign_at(q, mid) == 0:
            found.append(AlgebraicNumber(q, mid, mid))
        stack.append((mid, b))
        stack.append((a, mid))
    out.extend(found)
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def _as_interval(target, prec):
    if callable(target):
        return target(prec)
    return target


def match_root(p, target):
    """The unique root of ``p`` lying in ``target``.

    ``target`` is a DyadicInterval, or a callable ``prec -> DyadicInterval``
    whose enclosures shrink with precision.  Root intervals are refined in
    step with the target until exactly one of them meets it.
    """
    roots = isolate_real_roots(p)
    last = None
    for prec in precision_schedule(DEFAULT_PRECISION, precision_cap()):
        iv = _as_interval(target, prec)
        lo_q, hi_q = iv.lo_q, iv.hi_q
        w = hi_q - lo_q
        bits = prec if w == 0 else min(prec, max(8, 4 - (w.numerator.bit_length() - w.denominator.bit_length())))
        roots = [r.refine(bits) for r in roots]
        hits = [r for r in roots if not (r.hi < lo_q or r.lo > hi_q)]
        if not hits:
            raise NoMatchingRoot("no root of the annihilator lies in the target enclosure")
        if len(hits) == 1:
            return hits[0]
        last = hits
        roots = hits
        if not callable(target):
            # a fixed target cannot be refined; settle once the roots are tight
            if all(r.hi - r.lo < (hi_q - lo_q) / 4 or r.is_exact for r in hits):
                inside = [r for r in hits if lo_q <= r.lo and r.hi <= hi_q]
                if len(inside) > 1:
                    raise AmbiguousRoot(f"{len(inside)} roots lie inside the target enclosure")
    raise PrecisionExhausted(f"{len(last)} candidate roots still meet the target at the precision cap")
