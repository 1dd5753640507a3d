"""Counting quarter-plane walks and excursions by dynamic programming.

Three backends share one layer-by-layer recurrence
f(i, j, n) = sum over steps (dx, dy) of f(i - dx, j - dy, n - 1):

* exact big integers (numpy object arrays), verdict grade;
* double precision with Cramer weights x^dx y^dy / rho on each step, so
  entries are probabilities and never overflow; used for fitting only;
* dyadic intervals with certified weights, used to check the weighted-walk
  identity e_n = rho^n * P(excursion of length n).

Positions that cannot get back to the origin before the last layer are
pruned, which keeps only a triangle of the grid alive.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import CapExceeded, HalfPlaneConfined, PeriodMismatch
from .numsolve import DyadicInterval, eval_rho, float_critical_point
from .stepset import char_poly, is_half_plane_confined

__all__ = [
    "EXACT_CAP",
    "ExcursionSeq",
    "count_excursions",
    "walk_counts",
    "detect_period",
    "lattice_period",
    "weighted_excursion_probs",
    "weighted_excursion_prob",
    "drift_check",
]

EXACT_CAP = 400


@dataclass(frozen=True)
class ExcursionSeq:
    """Excursion counts e_0..e_N.

    In exact mode ``terms`` holds Python ints.  In float mode it holds
    e_n / scale^n as floats and ``certified`` is False.
    """

    terms: tuple
    period: int
    exact: bool = True
    scale: float = 1.0

    @property
    def certified(self):
        return self.exact

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, k):
        return self.terms[k]


def _extent(steps, axis):
    up = max(0, max(st[axis] for st in steps))
    down = max(0, -min(st[axis] for st in steps))
    return up, down


def _bounds(steps, n, n_max):
    """Largest coordinates that are reachable after n steps and can still return by n_max."""
    ux, dx = _extent(steps, 0)
    uy, dy = _extent(steps, 1)
    return min(n * ux, (n_max - n) * dx), min(n * uy, (n_max - n) * dy)


def _run(steps, n_max, zero, one, weights=None, dtype=object):
    """Generic pruned DP; yields the origin entry for n = 0..n_max."""
    ux, dx = _extent(steps, 0)
    uy, dy = _extent(steps, 1)
    size_x = min(n_max * ux, n_max * dx) + 1 if (ux and dx) else 1
    size_y = min(n_max * uy, n_max * dy) + 1 if (uy and dy) else 1
    cur = np.empty((1, 1), dtype=dtype)
    cur[0, 0] = one
    out = [one]
    for n in range(1, n_max + 1):
        bx, by = _bounds(steps, n, n_max)
        bx, by = min(bx, size_x - 1), min(by, size_y - 1)
        new = np.empty((bx + 1, by + 1), dtype=dtype)
        new.fill(zero)
        px, py = cur.shape
        for k, (sx, sy) in enumerate(steps):
            # target (i, j) = source (i - sx, j - sy), clipped to both grids
            i0, i1 = max(0, sx), min(bx + 1, px + sx)
            j0, j1 = max(0, sy), min(by + 1, py + sy)
            if i0 >= i1 or j0 >= j1:
                continue
            src = cur[i0 - sx:i1 - sx, j0 - sy:j1 - sy]
            if weights is None:
                new[i0:i1, j0:j1] += src
            else:
                new[i0:i1, j0:j1] += src * weights[k]
        cur = new
        out.append(cur[0, 0])
    return out


def count_excursions(s, n_max, mode="exact", scale=None, cap=EXACT_CAP):
    """Excursion counts e_0..e_{n_max}.

    ``mode="exact"`` returns integers and refuses n_max above ``cap``.
    ``mode="float"`` returns e_n / rho^n in double precision, using the
    Cramer weights of the floating critical point (or of ``scale``, a tuple
    ``(x, y)`` of positive floats).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    steps = s.steps
    if mode == "exact":
        if n_max > cap:
            raise CapExceeded(f"exact enumeration capped at n = {cap}")
        terms = tuple(int(v) for v in _run(steps, n_max, 0, 1))
        return ExcursionSeq(terms, lattice_period(s) or 1, True, 1.0)
    if mode != "float":
        raise ValueError("mode must be 'exact' or 'float'")
    x, y = scale if scale is not None else float_critical_point(s)
    rho = sum(x ** i * y ** j for i, j in steps)
    weights = [x ** i * y ** j / rho for i, j in steps]
    terms = tuple(float(v) for v in _run(steps, n_max, 0.0, 1.0, weights, dtype=np.float64))
    return ExcursionSeq(terms, lattice_period(s) or 1, False, rho)


def walk_counts(s, n):
    """Exact table f(i, j, n) of quarter-plane walks of length n ending at (i, j)."""
    steps = s.steps
    ux, _ = _extent(steps, 0)
    uy, _ = _extent(steps, 1)
    cur = np.empty((1, 1), dtype=object)
    cur[0, 0] = 1
    for m in range(1, n + 1):
        bx, by = m * ux, m * uy
        new = np.empty((bx + 1, by + 1), dtype=object)
        new.fill(0)
        px, py = cur.shape
        for sx, sy in steps:
            i0, i1 = max(0, sx), min(bx + 1, px + sx)
            j0, j1 = max(0, sy), min(by + 1, py + sy)
            if i0 < i1 and j0 < j1:
                new[i0:i1, j0:j1] += cur[i0 - sx:i1 - sx, j0 - sy:j1 - sy]
        cur = new
    return cur


# ---------------------------------------------------------------------------
# periodicity
# ---------------------------------------------------------------------------

def _hnf2(vectors):
    """Row-style Hermite basis of the integer lattice spanned by 2-d vectors."""
    a = [list(v) for v in vectors if v != (0, 0)]
    # first column gcd with extended Euclid on rows
    basis = []
    rows = a
    pivot = None
    rest = []
    for r in rows:
        if pivot is None:
            if r[0] != 0:
                pivot = r
            else:
                rest.append(r)
            continue
        while r[0] != 0:
            q = pivot[0] // r[0]
            pivot, r = r, [pivot[0] - q * r[0], pivot[1] - q * r[1]]
        rest.append(r)
    if pivot is not None:
        if pivot[0] < 0:
            pivot = [-pivot[0], -pivot[1]]
        basis.append(pivot)
    g = 0
    for r in rest:
        g = gcd(g, r[1])
    if g:
        basis.append([0, g])
    return basis


def _in_lattice(v, basis):
    x, y = v
    if len(basis) == 2:
        (a, b), (_, g) = basis
        if x % a:
            return False
        return (y - (x // a) * b) % g == 0
    if len(basis) == 1:
        a, b = basis[0]
        if a:
            return x % a == 0 and (x // a) * b == y
        return x == 0 and b and y % b == 0
    return x == 0 and y == 0


def lattice_period(s):
    """gcd of the lengths of closed walks in Z^2, or None when the steps span a line.

    A closed walk of length n exists (up to sign of multiplicities) exactly
    when n * d_1 lies in the lattice spanned by the differences d_k - d_1.
    """
    steps = s.steps
    d1 = steps[0]
    diffs = [(a - d1[0], b - d1[1]) for a, b in steps[1:]]
    basis = _hnf2(diffs)
    if len(basis) < 2:
        return None
    index = basis[0][0] * basis[1][1]
    for n in range(1, abs(index) + 1):
        if _in_lattice((n * d1[0], n * d1[1]), basis):
            return n
    return abs(index)


def detect_period(s, horizon=16):
    """Period of the excursion sequence, cross-checked against gcd{n <= horizon : e_n != 0}."""
    witness = is_half_plane_confined(s)
    if witness is not None:
        raise HalfPlaneConfined(witness)
    structural = lattice_period(s)
    terms = _run(s.steps, horizon, 0, 1)
    g = 0
    for n, e in enumerate(terms):
        if n and e:
            g = gcd(g, n)
    if structural is None or g == 0 or g != structural:
        raise PeriodMismatch(f"lattice period {structural} but excursion gcd {g} up to n = {horizon}")
    return structural


# ---------------------------------------------------------------------------
# weighted walk (Cramer transform)
# ---------------------------------------------------------------------------

def _cramer_weights(s, cp):
    prec = cp.bits + 32
    one = DyadicInterval(1, 1, 0, prec)
    rho = eval_rho(s, cp)
    xi, yi = cp.x0.reciprocal(), cp.y0.reciprocal()
    out = []
    for i, j in s.steps:
        w = one
        w = w * (cp.x0 ** i if i >= 0 else xi ** (-i))
        w = w * (cp.y0 ** j if j >= 0 else yi ** (-j))
        out.append(w / rho)
    return out


def weighted_excursion_probs(s, cp, n_max, cap=EXACT_CAP):
    """Interval enclosures of P(the weighted walk is an excursion of length n), n = 0..n_max.

    Each step (i, j) has probability x0^i y0^j / chi(x0, y0); every closed
    walk of length n then has probability rho^-n, so the value at n equals
    e_n / rho^n.
    """
    if n_max > cap:
        raise CapExceeded(f"weighted enumeration capped at n = {cap}")
    prec = cp.bits + 32
    zero = DyadicInterval(0, 0, 0, prec)
    one = DyadicInterval(1, 1, 0, prec)
    return _run(s.steps, n_max, zero, one, _cramer_weights(s, cp))


def weighted_excursion_prob(s, cp, n):
    return weighted_excursion_probs(s, cp, n)[n]


def drift_check(s, cp):
    """Enclosures of the two drift components of the weighted walk; both contain 0."""
    prec = cp.bits + 32
    one = DyadicInterval(1, 1, 0, prec)
    chi = char_poly(s)
    rho = chi.evaluate(cp.x0, cp.y0, one)
    ex = cp.x0 * chi.diff_x().evaluate(cp.x0, cp.y0, one) / rho
    ey = cp.y0 * chi.diff_y().evaluate(cp.x0, cp.y0, one) / rho
    return ex, ey
