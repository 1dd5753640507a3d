"""Exact integer polynomial arithmetic.

Two representations live here:

* :class:`IntPoly` -- dense univariate polynomial over the integers, constant
  term first.  Houses eliminants, cyclotomic polynomials and minimal
  polynomials.
* :class:`MPoly` -- sparse multivariate polynomial over the integers with
  named variables.  Houses the numerators of the partial derivatives of the
  characteristic polynomial and the polynomials fed to elimination.

Resultants are computed with the subresultant algorithm for univariate
integer polynomials, and by evaluation/interpolation for multivariate ones
(every evaluation point keeps the formal degree of the Sylvester matrix, so
the specialisation is exact).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm

from .errors import DivisionByZeroPoly, InexactDivision, ParseError

__all__ = [
    "IntPoly",
    "MPoly",
    "resultant",
    "gcd_poly",
    "divides",
    "squarefree_part",
    "cyclotomic",
    "cyclotomic_candidates",
    "chebyshev_double_cover",
    "minpoly_two_cos",
    "totients",
    "parse_poly",
]


# ---------------------------------------------------------------------------
# dense coefficient-list helpers (constant term first, no trailing zeros)
# ---------------------------------------------------------------------------

def _strip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _content(c):
    return reduce(gcd, c, 0)


def _prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    if len(a) - 1 < db:
        return list(a)
    r = list(a)
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        d = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for i, bi in enumerate(b):
            r[i + d] -= lr * bi
        r.pop()
        _strip(r)
        e -= 1
    if e:
        f = lb ** e
        r = [c * f for c in r]
    return r


def _exact_quo(a, b):
    """Quotient a / b where b divides a in Z[x]; raises InexactDivision otherwise."""
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        if r:
            raise InexactDivision("nonzero remainder")
        return []
    q = [0] * (len(r) - db)
    lb = b[-1]
    for d in range(len(r) - 1 - db, -1, -1):
        top = r[d + db]
        if top == 0:
            continue
        qd, rem = divmod(top, lb)
        if rem:
            raise InexactDivision("quotient is not integral")
        q[d] = qd
        for i, bi in enumerate(b):
            r[i + d] -= qd * bi
    if any(r):
        raise InexactDivision("nonzero remainder")
    return _strip(q)


def _res_actual(a, b):
    """Resultant of integer coefficient lists (true degrees), subresultant PRS."""
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** db * cb ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        div = g * h ** delta
        b = [x // div for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        da = len(a) - 1
        if not b:
            return 0
        db = len(b) - 1
        if db == 0:
            break
    # final step: h <- h^(1 - deg a) * lc(b)^deg a
    h = b[-1] ** da // h ** (da - 1) if da >= 1 else h
    return s * t * h


def _res_formal(f, g, m, n):
    """Resultant with formal degrees m >= deg f and n >= deg g (Sylvester size m+n)."""
    if m == 0 and n == 0:
        return 1
    if n == 0:
        return (g[0] if g else 0) ** m
    if m == 0:
        return (f[0] if f else 0) ** n
    if not f or not g:
        return 0
    mf, ng = len(f) - 1, len(g) - 1
    if mf < m and ng < n:
        return 0
    if mf < m:
        sign = -1 if (n * (m - mf)) % 2 else 1
        return sign * g[-1] ** (m - mf) * _res_formal(f, g, mf, n)
    if ng < n:
        return f[-1] ** (n - ng) * _res_formal(f, g, m, ng)
    return _res_actual(f, g)


def _gcd_lists(a, b):
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        if not a:
            return []
        c = _content(a) * (1 if a[-1] > 0 else -1)
        return [x // c for x in a]
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    g = h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [1]
            break
        a = b
        div = g * h ** delta
        b = [x // div for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
    c = _content(b) * (1 if b[-1] > 0 else -1)
    return [x // c for x in b]


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class IntPoly:
    """Dense univariate integer polynomial; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        self.coeffs = tuple(_strip(c))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def from_roots(cls, roots):
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic structure --------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-a for a in self.coeffs])

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other):
        """Quotient by ``other``; raises InexactDivision unless it is integral and exact."""
        return IntPoly(_exact_quo(list(self.coeffs), list(self._coerce(other).coeffs)))

    def __floordiv__(self, other):
        return self.exact_div(other)

    def prem(self, other):
        if not other:
            raise DivisionByZeroPoly("division by the zero polynomial")
        return IntPoly(_prem(list(self.coeffs), list(other.coeffs)))

    def __call__(self, v):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * v + a
        return acc

    def derivative(self):
        return IntPoly([k * a for k, a in enumerate(self.coeffs)][1:])

    def compose(self, q):
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def scale_arg(self, s):
        """p(s * t) for an integer s."""
        return IntPoly([a * s ** k for k, a in enumerate(self.coeffs)])

    def reverse(self):
        return IntPoly(reversed(self.coeffs))

    def trailing_zeros(self):
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    # -- normalisation ----------------------------------------------------
    def content(self):
        return _content(self.coeffs)

    def primitive(self):
        c = self.content()
        return IntPoly([a // c for a in self.coeffs]) if c else IntPoly()

    def canonical(self):
        """Primitive part with positive leading coefficient."""
        p = self.primitive()
        return -p if p.lc < 0 else p

    def mod(self, p):
        return tuple(a % p for a in self.coeffs)

    # -- text -------------------------------------------------------------
    def format(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntPoly({self.format()!r})"


_TERM = re.compile(r"[+-]?[^+-]+")


def parse_poly(text, var="t"):
    """Parse ``"t^4+9/2*t^3-17"``-style text; rational coefficients are cleared by their lcm."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ParseError("empty polynomial")
    terms = {}
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = m.end()
        tok = m.group(0)
        sign = -1 if tok[0] == "-" else 1
        tok = tok.lstrip("+-")
        if var in tok:
            coef_part, _, mono = tok.partition(var)
            coef_part = coef_part.rstrip("*")
            if mono == "":
                k = 1
            elif mono.startswith("^") and mono[1:].isdigit():
                k = int(mono[1:])
            else:
                raise ParseError(f"bad monomial {tok!r} in {text!r}")
        else:
            coef_part, k = tok, 0
        try:
            coef = Fraction(coef_part) if coef_part else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {coef_part!r} in {text!r}") from exc
        terms[k] = terms.get(k, 0) + sign * coef
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    den = lcm(*(c.denominator for c in terms.values()))
    deg = max(terms)
    return IntPoly([int(terms.get(k, 0) * den) for k in range(deg + 1)])


def gcd_poly(p, q):
    """Primitive gcd with positive leading coefficient."""
    return IntPoly(_gcd_lists(list(p.coeffs), list(q.coeffs)))


def divides(p, q):
    """True iff ``p`` divides ``q`` over the rationals."""
    if not p:
        raise DivisionByZeroPoly("zero polynomial cannot divide")
    if not q:
        return True
    return not _prem(list(q.coeffs), list(p.coeffs))


def squarefree_part(p):
    if not p:
        raise DivisionByZeroPoly("squarefree part of the zero polynomial")
    g = gcd_poly(p, p.derivative())
    return IntPoly(_exact_quo(list(p.canonical().coeffs), list(g.coeffs))).canonical()


def resultant(p, q, var=None):
    """Sylvester resultant.

    For two :class:`IntPoly` returns an ``int``.  For two :class:`MPoly`
    eliminates ``var`` and returns an :class:`MPoly` in the remaining
    variables.
    """
    if isinstance(p, IntPoly) and isinstance(q, IntPoly):
        return _res_formal(list(p.coeffs), list(q.coeffs), p.degree, q.degree)
    if p.vars != q.vars:
        raise ValueError("resultant operands must share variables")
    if var is None:
        if len(p.vars) != 1:
            raise ValueError("var is required for multivariate resultants")
        var = p.vars[0]
    m, n = p.degree(var), q.degree(var)
    if m < 0 or n < 0:
        raise ValueError("resultant of a zero polynomial")
    return _mres(p, q, var, m, n)


# ---------------------------------------------------------------------------
# multivariate
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse integer polynomial in named variables ``vars``.

    ``terms`` maps exponent tuples (aligned with ``vars``) to nonzero ints.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, name, vars):
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: 1})

    @classmethod
    def const(cls, a, vars):
        return cls(vars, {(0,) * len(vars): a})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, int):
            return MPoly.const(other, self.vars)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other, self.vars)
        return isinstance(other, MPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def _idx(self, var):
        return self.vars.index(var)

    def degree(self, var):
        i = self._idx(var)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def free_of(self, var):
        return self.degree(var) <= 0

    def eval_at(self, var, value):
        """Substitute an integer for ``var``; the variable is dropped."""
        i = self._idx(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = {}
        for e, c in self.terms.items():
            key = e[:i] + e[i + 1:]
            out[key] = out.get(key, 0) + c * value ** e[i]
        return MPoly(rest, out)

    def coeff_list(self, var):
        """Coefficients in ``var`` (lowest first) as MPolys in the other variables."""
        i = self._idx(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        d = self.degree(var)
        buckets = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        return [MPoly(rest, b) for b in buckets]

    def to_intpoly(self):
        if len(self.vars) != 1:
            if len(self.vars) == 0:
                return IntPoly((self.terms.get((), 0),))
            raise ValueError("not univariate")
        d = self.degree(self.vars[0])
        return IntPoly([self.terms.get((k,), 0) for k in range(d + 1)])

    def to_int(self):
        if any(any(e) for e in self.terms):
            raise ValueError("not a constant")
        return self.terms.get((0,) * len(self.vars), 0)

    def strip_monomial(self, var):
        """Divide out the largest power of ``var`` dividing the polynomial; returns (poly, k)."""
        i = self._idx(var)
        k = min((e[i] for e in self.terms), default=0)
        if k == 0:
            return self, 0
        return MPoly(self.vars, {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in self.terms.items()}), k

    def content(self):
        return reduce(gcd, self.terms.values(), 0)

    def leading_term(self):
        """Leading (exponent, coefficient) in graded lexicographic order."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def canonical(self):
        """Primitive with positive graded-lex leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return MPoly(self.vars, {e: v // c for e, v in self.terms.items()})

    def __call__(self, *values):
        acc = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v ** k
            acc = acc + term
        return acc

    def format(self):
        if not self.terms:
            return "0"
        out = ""
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += ("-" if c < 0 else "+") + body
        return out

    __str__ = format

    def __repr__(self):
        return f"MPoly({self.vars}, {self.format()!r})"


def _interpolate(values, vars, w):
    """Interpolate MPoly values taken at w = 0..D into an MPoly over ``vars``.

    ``values[k]`` lives in ``vars`` minus ``w``; uses integer Newton forward
    differences (exact for integer polynomials).
    """
    i = vars.index(w)
    keys = set()
    for v in values:
        keys.update(v.terms)
    out = {}
    d = len(values) - 1
    for key in keys:
        seq = [v.terms.get(key, 0) for v in values]
        # forward differences -> falling-factorial coefficients
        newton = []
        cur = seq
        for k in range(d + 1):
            fact = 1
            for j in range(2, k + 1):
                fact *= j
            q, r = divmod(cur[0], fact)
            if r:
                raise InexactDivision("interpolation produced a non-integer coefficient")
            newton.append(q)
            cur = [cur[j + 1] - cur[j] for j in range(len(cur) - 1)]
        # Horner in the falling-factorial basis
        poly = [newton[-1]]
        for k in range(d - 1, -1, -1):
            shifted = [0] + poly
            for j, c in enumerate(poly):
                shifted[j] -= k * c
            shifted[0] += newton[k]
            poly = shifted
        for deg, c in enumerate(poly):
            if c:
                out[key[:i] + (deg,) + key[i:]] = c
    return MPoly(vars, out)


def _mres(p, q, var, m, n):
    rest = tuple(v for v in p.vars if v != var)
    if not rest:
        f = p.to_intpoly().coeffs
        g = q.to_intpoly().coeffs
        return MPoly((), {(): _res_formal(list(f), list(g), m, n)})
    w = rest[-1]
    bound = n * max(p.degree(w), 0) + m * max(q.degree(w), 0)
    values = [_mres(p.eval_at(w, k), q.eval_at(w, k), var, m, n) for k in range(bound + 1)]
    out = _interpolate(values, rest, w)
    # one extra point guards the degree bound
    check = _mres(p.eval_at(w, bound + 1), q.eval_at(w, bound + 1), var, m, n)
    if out.eval_at(w, bound + 1) != check:
        raise ArithmeticError("resultant interpolation failed its check point")
    return out


# ---------------------------------------------------------------------------
# cyclotomic and Chebyshev-type transforms
# ---------------------------------------------------------------------------

def totients(limit):
    """Euler phi for 0..limit (phi(0) reported as 0)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _factor(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial.

    For squarefree n > 1, Phi_n = prod over d | n of (1 - x^d)^mu(n/d), which
    is expanded as a power series truncated past degree phi(n); in general
    Phi_n(x) = Phi_rad(n)(x^(n / rad(n))).
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return IntPoly((-1, 1))
    primes = _factor(n)
    rad = 1
    for p in primes:
        rad *= p
    phi_rad = 1
    for p in primes:
        phi_rad *= p - 1
    size = phi_rad + 1
    c = [0] * size
    c[0] = 1
    for mask in range(1 << len(primes)):
        d = 1
        bits = 0
        for k, p in enumerate(primes):
            if mask >> k & 1:
                d *= p
                bits += 1
        # d runs over divisors of rad; mu(rad / d) = (-1)^(omega(rad) - bits)
        if (len(primes) - bits) % 2 == 0:
            for k in range(size - 1, d - 1, -1):
                c[k] -= c[k - d]
        else:
            for k in range(d, size):
                c[k] += c[k - d]
    m = n // rad
    if m == 1:
        return IntPoly(c)
    out = [0] * (phi_rad * m + 1)
    for k, a in enumerate(c):
        out[k * m] = a
    return IntPoly(out)


def cyclotomic_candidates(degree):
    """All N with phi(N) <= degree, searched over N <= 2*degree**2 (phi(N) >= sqrt(N/2))."""
    if degree < 1:
        raise ValueError("degree bound must be positive")
    limit = 2 * degree * degree
    phi = totients(limit)
    return [n for n in range(1, limit + 1) if phi[n] <= degree]


def chebyshev_double_cover(p):
    """Primitive part of (2x)^deg p * p((x^2+1)/(2x)).

    Its roots are exactly the z with p((z + 1/z)/2) = 0.
    """
    if not p:
        raise ValueError("zero polynomial")
    d = p.degree
    x2p1 = IntPoly((1, 0, 1))
    two_x = IntPoly((0, 2))
    acc = IntPoly()
    for k, a in enumerate(p.coeffs):
        if a:
            acc = acc + a * x2p1 ** k * two_x ** (d - k)
    return acc.canonical()


def minpoly_two_cos(n):
    """Minimal polynomial of 2*cos(2*pi/n), n >= 3, read off Phi_n(x) = x^(phi/2) Psi(x + 1/x)."""
    if n < 3:
        raise ValueError("minpoly_two_cos needs n >= 3")
    phi_n = cyclotomic(n).coeffs
    half = (len(phi_n) - 1) // 2
    # Dickson polynomials D_k(s) = x^k + x^-k in s = x + 1/x
    s = IntPoly((0, 1))
    dickson = [IntPoly((2,)), s]
    while len(dickson) <= half:
        dickson.append(s * dickson[-1] - dickson[-2])
    out = IntPoly((phi_n[half],))
    for k in range(1, half + 1):
        out = out + phi_n[half + k] * dickson[k]
    return out
