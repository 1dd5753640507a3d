"""Integer eliminants annihilating the growth constant rho and the correlation c.

The critical point satisfies chi_x = chi_y = 0 (numerators of the first
partials).  Adding one relation P(x, y, t) = 0 that ties t to the target and
eliminating y, then x, by resultants gives a univariate polynomial in t
vanishing at the target.  The result may carry spurious factors; downstream
code picks the right root by certified interval matching.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bigpoly import IntPoly, MPoly, gcd_poly, resultant, squarefree_part
from .errors import DegenerateElimination, HalfPlaneConfined, ZeroHessianTerm
from .stepset import LaurentPoly2, char_poly, is_half_plane_confined, partials

__all__ = ["Eliminant", "eliminant_rho", "eliminant_c", "rho_relation", "c_relation"]

VARS = ("x", "y", "t")


@dataclass(frozen=True)
class Eliminant:
    """Squarefree canonical polynomial in t vanishing at the target value."""

    poly: IntPoly
    target: str
    provenance: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        return self.poly.format("t")


def _lift(p):
    """Embed an MPoly in (x, y) into (x, y, t)."""
    return MPoly(VARS, {e + (0,): c for e, c in p.terms.items()})


def _numer_with_t(parts):
    """numer(sum of t^k * L_k) for Laurent polynomials L_k in x, y; ``parts`` maps k to L_k."""
    nonzero = [lp for lp in parts.values() if lp]
    a = max(0, -min(min(i for i, _ in lp.terms) for lp in nonzero))
    b = max(0, -min(min(j for _, j in lp.terms) for lp in nonzero))
    out = {}
    for k, lp in parts.items():
        for (i, j), c in lp.terms.items():
            out[(i + a, j + b, k)] = out.get((i + a, j + b, k), 0) + c
    p = MPoly(VARS, out)
    # the shift above may overshoot when a monomial divides every term
    for v in ("x", "y"):
        p, _ = p.strip_monomial(v)
    return p.canonical()


def rho_relation(s):
    """numer(t - chi) as a polynomial in x, y, t."""
    chi = char_poly(s)
    return _numer_with_t({0: -chi, 1: LaurentPoly2({(0, 0): 1})})


def c_relation(s):
    """numer(t^2 * chi_xx * chi_yy - chi_xy^2) as a polynomial in x, y, t."""
    d = partials(char_poly(s))
    if not d.chi_xx or not d.chi_yy:
        raise ZeroHessianTerm("a pure second partial of chi vanishes identically")
    return _numer_with_t({2: d.chi_xx * d.chi_yy, 0: -(d.chi_xy * d.chi_xy)})


def _eliminate(system, var, strip):
    """Remove ``var`` from a polynomial system.

    Polynomials free of ``var`` pass through; the dependent ones are paired
    with the last dependent one (the relation carrying t) via resultants.
    Results are stripped of powers of ``strip`` (the coordinates are positive
    at the critical point, so such factors never carry the target) and of
    integer content; identically zero resultants carry no information and are
    dropped.
    """
    free = [p for p in system if p.free_of(var)]
    dep = [p for p in system if not p.free_of(var)]
    rest = tuple(v for v in system[0].vars if v != var)
    out = [p.eval_at(var, 0) for p in free]
    if len(dep) >= 2:
        pivot = dep[-1]
        out += [resultant(p, pivot, var) for p in dep[:-1]]
    log = {"dropped_zero": 0, "monomials_stripped": 0}
    cleaned = []
    for p in out:
        if not p:
            log["dropped_zero"] += 1
            continue
        if strip in rest:
            p, k = p.strip_monomial(strip)
            log["monomials_stripped"] += k
        cleaned.append(p.canonical())
    return cleaned, log


def _double_resultant(system, first, second):
    stage1, log1 = _eliminate(system, first, second)
    if not stage1:
        return None, [log1]
    stage2, log2 = _eliminate(stage1, second, None)
    if not stage2:
        return None, [log1, log2]
    g = IntPoly()
    for p in stage2:
        g = gcd_poly(g, p.to_intpoly())
        if g.degree == 0:
            break
    if g.degree < 1:
        return None, [log1, log2]
    return g, [log1, log2]


_ORDERS = {"yx": ("y", "x"), "xy": ("x", "y")}


def _eliminant(s, relation, target, strip_t, order=None):
    witness = is_half_plane_confined(s)
    if witness is not None:
        raise HalfPlaneConfined(witness)
    d = partials(char_poly(s))
    system = [_lift(d.chi_x), _lift(d.chi_y), relation]
    tried = []
    orders = [_ORDERS[order]] if order else [_ORDERS["yx"], _ORDERS["xy"]]
    for first, second in orders:
        g, logs = _double_resultant(system, first, second)
        tried.append(f"{first},{second}")
        if g is None:
            continue
        t_power = 0
        if strip_t:
            t_power = g.trailing_zeros()
            g = IntPoly(g.coeffs[t_power:])
        content = g.content()
        sq = squarefree_part(g)
        if strip_t and sq.degree < 1:
            continue
        provenance = {
            "order": f"{first} then {second}",
            "orders_tried": tried,
            "t_power_stripped": t_power,
            "content_stripped": content,
            "intermediate_monomials_stripped": logs[0]["monomials_stripped"],
            "zero_resultants_dropped": sum(lg["dropped_zero"] for lg in logs),
            "degree_before_squarefree": g.degree,
        }
        return Eliminant(sq, target, provenance)
    raise DegenerateElimination(f"elimination degenerate for {target} under orders {tried}")


def eliminant_rho(s, order=None):
    """Squarefree E in Z[t] with E(rho) = 0; powers of t are removed since rho > 0.

    ``order`` forces "yx" (y eliminated first) or "xy"; by default "yx" is
    tried and "xy" is the fallback.
    """
    return _eliminant(s, rho_relation(s), "rho", strip_t=True, order=order)


def eliminant_c(s, order=None):
    """Squarefree E in Z[t] with E(c) = E(-c) = 0.

    Powers of t are kept: c = 0 happens (for the simple walk, for instance).
    """
    return _eliminant(s, c_relation(s), "c", strip_t=False, order=order)
