"""Step sets, their characteristic Laurent polynomial, and structural predicates."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .bigpoly import MPoly
from .errors import InvalidStep, NotSmallStep, ParseError, PredicateOutOfScope

__all__ = [
    "StepSet",
    "LaurentPoly2",
    "parse_stepset",
    "format_stepset",
    "char_poly",
    "partials",
    "Partials",
    "is_singular",
    "is_half_plane_confined",
    "drift",
    "has_axial_symmetry",
    "group_finite_predicate",
    "SIMPLE_WALK",
    "KREWERAS",
]


@dataclass(frozen=True)
class StepSet:
    """Canonical (lexicographically sorted, duplicate-free) set of nonzero steps."""

    steps: tuple

    def __post_init__(self):
        steps = tuple(sorted((int(a), int(b)) for a, b in self.steps))
        if not steps:
            raise InvalidStep("a step set must be nonempty")
        if (0, 0) in steps:
            raise InvalidStep("the zero step (0,0) is not allowed")
        if len(set(steps)) != len(steps):
            raise InvalidStep("duplicate step")
        object.__setattr__(self, "steps", steps)

    @property
    def small_step(self):
        return all(abs(a) <= 1 and abs(b) <= 1 for a, b in self.steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def transpose(self):
        return StepSet(tuple((b, a) for a, b in self.steps))

    def __str__(self):
        return format_stepset(self)


_PAIR = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")


def parse_stepset(text):
    """Parse ``"(dx,dy),(dx,dy),..."``; square brackets are accepted as well."""
    s = text.strip().replace("[", "(").replace("]", ")")
    if s.startswith("((") and s.endswith("))"):
        s = s[1:-1]
    pairs = []
    pos = 0
    for m in _PAIR.finditer(s):
        gap = s[pos:m.start()].strip()
        if gap != ("," if pairs else ""):
            raise ParseError(f"malformed step list near {s[pos:m.start() + 1]!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if not pairs or s[pos:].strip():
        raise ParseError(f"malformed step list {text!r}")
    if len(set(pairs)) != len(pairs):
        raise InvalidStep("duplicate step")
    return StepSet(tuple(pairs))


def format_stepset(s):
    return ",".join(f"({a},{b})" for a, b in s.steps)


SIMPLE_WALK = StepSet(((1, 0), (-1, 0), (0, 1), (0, -1)))
KREWERAS = StepSet(((-1, 0), (0, -1), (1, 1)))


# ---------------------------------------------------------------------------
# Laurent polynomials in x, y
# ---------------------------------------------------------------------------

class LaurentPoly2:
    """Integer Laurent polynomial in x, y; ``terms`` maps (i, j) to the coefficient of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {(int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c}

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out)

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({e: c * other for e, c in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def diff_x(self):
        return LaurentPoly2({(i - 1, j): i * c for (i, j), c in self.terms.items()})

    def diff_y(self):
        return LaurentPoly2({(i, j - 1): j * c for (i, j), c in self.terms.items()})

    def min_exponents(self):
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def numerator(self):
        """Canonical numerator as an ordinary polynomial in (x, y).

        Monomial factors x^a y^b are removed as well as denominators: the
        critical point has positive coordinates, so they carry no roots of
        interest.
        """
        if not self.terms:
            return MPoly(("x", "y"), {})
        a, b = self.min_exponents()
        return MPoly(("x", "y"), {(i - a, j - b): c for (i, j), c in self.terms.items()}).canonical()

    def evaluate(self, x, y, one=1):
        """Evaluate at (x, y); works for any field-like values supporting 1/x via ``one / x``."""
        xi = one / x
        yi = one / y
        acc = None
        for (i, j), c in sorted(self.terms.items()):
            term = (x ** i if i >= 0 else xi ** (-i)) if i else one
            term = term * ((y ** j if j >= 0 else yi ** (-j)) if j else one)
            term = term * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else one * 0

    def format(self):
        """Readable form such as ``1/x + 1/y + x + y + x/y``."""
        if not self.terms:
            return "0"

        def mono(i, j):
            num = [v if k == 1 else f"{v}^{k}" for v, k in (("x", i), ("y", j)) if k > 0]
            den = [v if k == -1 else f"{v}^{-k}" for v, k in (("x", i), ("y", j)) if k < 0]
            n = "*".join(num) if num else "1"
            if not den:
                return n
            d = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
            return f"{n}/{d}"

        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            m = mono(i, j)
            mag = abs(c)
            if mag == 1:
                body = m
            elif m.startswith("1/"):
                body = f"{mag}{m[1:]}"
            else:
                body = str(mag) if m == "1" else f"{mag}*{m}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = format

    def __repr__(self):
        return f"LaurentPoly2({self.format()!r})"


def char_poly(s):
    """chi(x, y) = sum of x^i y^j over the steps."""
    return LaurentPoly2({step: 1 for step in s.steps})


@dataclass(frozen=True)
class Partials:
    chi_x: MPoly
    chi_y: MPoly
    chi_xx: LaurentPoly2
    chi_xy: LaurentPoly2
    chi_yy: LaurentPoly2


def partials(chi):
    """Numerators of the first partials and the exact second partials of chi."""
    dx = chi.diff_x()
    dy = chi.diff_y()
    return Partials(dx.numerator(), dy.numerator(), dx.diff_x(), dx.diff_y(), dy.diff_y())


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

_SINGULAR_TRIGGERS = {(-1, 0), (-1, -1), (0, -1)}


def _require_small(s):
    if not s.small_step:
        raise NotSmallStep("predicate defined only for steps in {-1,0,1}^2")


def is_singular(s):
    """True when no step lies in {(-1,0), (-1,-1), (0,-1)}."""
    _require_small(s)
    return not (_SINGULAR_TRIGGERS & set(s.steps))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _primitive(v):
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _angle_cmp(a, b):
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = _cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def is_half_plane_confined(s):
    """A primitive (a, b) with a*dx + b*dy >= 0 on every step, or None.

    Uses the largest angular gap between consecutive step directions: the set
    is confined exactly when some gap is at least a half turn.
    """
    dirs = sorted({_primitive(v) for v in s.steps}, key=cmp_to_key(_angle_cmp))
    if len(dirs) == 1:
        return dirs[0]
    k = len(dirs)
    for idx in range(k):
        d, nxt = dirs[idx], dirs[(idx + 1) % k]
        cr = _cross(d, nxt)
        if cr < 0 or (cr == 0 and _dot(d, nxt) < 0):
            n1 = (-nxt[1], nxt[0])
            n2 = (d[1], -d[0])
            w = (n1[0] + n2[0], n1[1] + n2[1])
            if w == (0, 0):
                w = n1
            return _primitive(w)
    return None


def drift(s):
    return (sum(a for a, _ in s.steps), sum(b for _, b in s.steps))


def _require_nonsingular(s):
    if is_singular(s):
        raise PredicateOutOfScope("the finite-group criterion is stated only for nonsingular step sets")


def has_axial_symmetry(s):
    _require_small(s)
    _require_nonsingular(s)
    st = set(s.steps)
    return st == {(-a, b) for a, b in st} or st == {(a, -b) for a, b in st}


def group_finite_predicate(s):
    """Axial symmetry, or zero drift with a step count other than 5."""
    _require_small(s)
    _require_nonsingular(s)
    return has_axial_symmetry(s) or (drift(s) == (0, 0) and len(s) != 5)
