"""Irrationality of arccos(c)/pi and the non-D-finiteness verdict.

If arccos(c)/pi were rational, z = c + i*sqrt(1 - c^2) would be a root of
unity, so the transformed polynomial R(x) = (2x)^d E((x^2 + 1)/(2x)) of any
annihilator E of c would be divisible by some cyclotomic Phi_N with
phi(N) <= deg R.  Sweeping every such N and finding no common factor proves
irrationality.  A hit may come from a spurious factor of E, so each hit is
checked against the isolating interval of c itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .bigpoly import (
    IntPoly,
    chebyshev_double_cover,
    cyclotomic,
    cyclotomic_candidates,
    divides,
    minpoly_two_cos,
)
from .elim import eliminant_c, eliminant_rho
from .errors import DomainError, HalfPlaneConfined, PrecisionExhausted, QwalkError
from .numsolve import (
    DEFAULT_PRECISION,
    AlgebraicNumber,
    DyadicInterval,
    alpha_from_c,
    arccos_interval,
    eval_c,
    eval_rho,
    match_root,
    pi_interval,
    sign_at,
    solve_critical_point,
)
from .stepset import is_half_plane_confined

__all__ = [
    "CYCLOTOMIC_SWEEP",
    "RATIONAL_WITNESS",
    "INCONCLUSIVE",
    "NOT_D_FINITE",
    "NO_CONCLUSION",
    "HYPOTHESIS_FAILED",
    "IrrationalityCertificate",
    "Verdict",
    "rootofunity_sweep",
    "sweep",
    "cos_minpoly",
    "certify_alpha_irrational",
    "alpha_from_witness",
    "group_order_from_alpha",
    "non_dfinite_verdict",
]

CYCLOTOMIC_SWEEP = "CyclotomicSweep"
RATIONAL_WITNESS = "RationalWitness"
INCONCLUSIVE = "Inconclusive"

NOT_D_FINITE = "NotDFinite"
NO_CONCLUSION = "NoConclusion"
HYPOTHESIS_FAILED = "HypothesisFailed"

_PRIME = (1 << 61) - 1


def _rem_mod_p(r, b, p=_PRIME):
    """Remainder of r by the monic b over GF(p); coefficient lists, constant first."""
    r = [a % p for a in r]
    db = len(b) - 1
    b = [a % p for a in b]
    for d in range(len(r) - 1 - db, -1, -1):
        q = r[d + db]
        if q:
            for i in range(db + 1):
                r[d + i] = (r[d + i] - q * b[i]) % p
    return r[:db]


def _phi_divides(N, R):
    """Exact test Phi_N | R, after a sound modular prefilter.

    Phi_N is monic, so Phi_N | R over Z forces the remainder mod p to vanish;
    a nonzero modular remainder therefore rules N out.
    """
    phi = cyclotomic(N)
    if phi.degree > R.degree:
        return False
    if any(_rem_mod_p(list(R.coeffs), list(phi.coeffs))):
        return False
    return divides(phi, R)


@dataclass(frozen=True)
class SweepResult:
    transformed: IntPoly
    checked: tuple
    hits: tuple


def sweep(E):
    """Transform E and sweep every N with phi(N) <= deg R for cyclotomic factors."""
    if not E or E.degree < 1:
        raise ValueError("the sweep needs a nonconstant polynomial")
    R = chebyshev_double_cover(E)
    checked = tuple(cyclotomic_candidates(R.degree))
    hits = tuple(N for N in checked if _phi_divides(N, R))
    return SweepResult(R, checked, hits)


def rootofunity_sweep(E):
    """Every N for which Phi_N shares a nonconstant factor with the transform of E."""
    return list(sweep(E).hits)


def cos_minpoly(N):
    """Minimal polynomial over Z of cos(2*pi/N)."""
    if N == 1:
        return IntPoly((-1, 1))
    if N == 2:
        return IntPoly((1, 1))
    return minpoly_two_cos(N).scale_arg(2).canonical()


def _root_in_isolator(M, c):
    """Whether the squarefree M vanishes at c, for M dividing c's annihilator."""
    if c.is_exact:
        return sign_at(M, c.lo) == 0
    # endpoints are not roots of the annihilator, hence not roots of M; the
    # open isolator holds at most one root of M
    return sign_at(M, c.lo) * sign_at(M, c.hi) < 0


@dataclass(frozen=True)
class IrrationalityCertificate:
    method: str
    degree_bound: int
    checked_N: tuple
    hits: tuple = ()
    witness: tuple | None = None
    transformed_poly: IntPoly | None = None
    note: str = ""

    @property
    def irrational(self):
        return self.method == CYCLOTOMIC_SWEEP

    def to_dict(self):
        out = {
            "method": self.method,
            "degree_bound": self.degree_bound,
            "checked_N_count": len(self.checked_N),
            "max_N": max(self.checked_N) if self.checked_N else None,
            "hits": list(self.hits),
            "witness": None,
            "transformed_poly": self.transformed_poly.format("x") if self.transformed_poly is not None else None,
            "note": self.note,
        }
        if self.witness is not None:
            q, N = self.witness
            out["witness"] = {"arccos_over_pi": f"{q.numerator}/{q.denominator}", "N": N}
        return out


def _witness_fraction(c, N):
    """arccos(c)/pi = 2k/N for the unique integer k pinned by interval arithmetic."""
    for bits in (64, 128, 256, 512):
        iv = c.enclosure(bits)
        ratio = arccos_interval(iv) / pi_interval(iv.prec) * Fraction(N, 2)
        lo, hi = ratio.lo_q, ratio.hi_q
        k_lo = -(-lo.numerator // lo.denominator)
        k_hi = hi.numerator // hi.denominator
        if k_lo == k_hi:
            return Fraction(2 * k_lo, N)
    raise PrecisionExhausted("could not pin the rational angle of c")


def certify_alpha_irrational(E_c, c):
    """Certificate deciding whether arccos(c)/pi is irrational."""
    poly = E_c.poly if hasattr(E_c, "poly") else E_c
    try:
        res = sweep(poly)
        base = dict(
            degree_bound=res.transformed.degree,
            checked_N=res.checked,
            hits=res.hits,
            transformed_poly=res.transformed,
        )
        if not res.hits:
            return IrrationalityCertificate(CYCLOTOMIC_SWEEP, **base)
        for N in res.hits:
            if _root_in_isolator(cos_minpoly(N), c):
                q = _witness_fraction(c, N)
                return IrrationalityCertificate(RATIONAL_WITNESS, witness=(q, N), **base)
        return IrrationalityCertificate(
            CYCLOTOMIC_SWEEP,
            note="cyclotomic factors belong to other roots of the eliminant; c is separated from all of them",
            **base,
        )
    except PrecisionExhausted as exc:
        return IrrationalityCertificate(INCONCLUSIVE, 0, (), note=str(exc))


def alpha_from_witness(q):
    """alpha = -1 - pi / arccos(-c) when arccos(c) = q * pi, i.e. -1 - 1/(1 - q)."""
    q = Fraction(q)
    if q == 1:
        raise DomainError("c = -1 gives no finite exponent")
    return -1 - 1 / (1 - q)


def group_order_from_alpha(alpha):
    """2 * min{l >= 1 : l / (alpha + 1) is an integer} for rational alpha."""
    a = Fraction(alpha) + 1
    if a == 0:
        raise DomainError("alpha = -1 is excluded")
    return 2 * abs(a.numerator)


# ---------------------------------------------------------------------------
# verdict
# ---------------------------------------------------------------------------

@dataclass
class Verdict:
    conclusion: str
    hypotheses: dict
    alpha: DyadicInterval | None = None
    alpha_exact: Fraction | None = None
    rho: AlgebraicNumber | None = None
    c: AlgebraicNumber | None = None
    certificate: IrrationalityCertificate | None = None
    eliminants: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    caveats: list = field(default_factory=list)

    def __post_init__(self):
        if self.conclusion == NOT_D_FINITE:
            assert self.certificate is not None and self.certificate.irrational
            assert self.hypotheses.get("half_plane_witness") is None


def _target(fn, s):
    def at(prec):
        return fn(s, solve_critical_point(s, prec))

    return at


def non_dfinite_verdict(s, bits=DEFAULT_PRECISION):
    """Run the whole pipeline on a step set and decide what can be proved."""
    from .enumeration import lattice_period

    witness = is_half_plane_confined(s)
    period = lattice_period(s)
    hyp = {
        "half_plane_witness": list(witness) if witness is not None else None,
        "small_step": s.small_step,
        "period": period,
        "integer_coefficients": True,
        "exponentially_bounded": True,
    }
    caveats = []
    if not s.small_step:
        caveats.append("steps beyond {-1,0,1}: the asymptotic form is only established for small steps")
    if period not in (None, 1, 2):
        caveats.append(f"lattice period {period}: periodic case beyond period 2")
    if witness is not None:
        return Verdict(HYPOTHESIS_FAILED, hyp, diagnostics=[str(HalfPlaneConfined(witness))], caveats=caveats)
    try:
        E_rho = eliminant_rho(s)
        E_c = eliminant_c(s)
        rho = match_root(E_rho.poly, _target(eval_rho, s))
        c = match_root(E_c.poly, _target(eval_c, s))
    except QwalkError as exc:
        hyp["certificate"] = INCONCLUSIVE
        return Verdict(NO_CONCLUSION, hyp, diagnostics=[f"{type(exc).__name__}: {exc}"], caveats=caveats)
    cert = certify_alpha_irrational(E_c, c)
    hyp["certificate"] = cert.method
    eliminants = {"rho": E_rho, "c": E_c}
    alpha_exact = None
    if cert.method == RATIONAL_WITNESS:
        alpha_exact = alpha_from_witness(cert.witness[0])
        alpha = DyadicInterval.point(alpha_exact, bits)
    else:
        alpha = alpha_from_c(c.enclosure(bits))
    if cert.method == CYCLOTOMIC_SWEEP:
        conclusion = NOT_D_FINITE
    else:
        conclusion = NO_CONCLUSION
    diagnostics = []
    if cert.method == INCONCLUSIVE:
        diagnostics.append("irrationality certificate inconclusive: " + cert.note)
    return Verdict(conclusion, hyp, alpha, alpha_exact, rho, c, cert, eliminants, diagnostics, caveats)
