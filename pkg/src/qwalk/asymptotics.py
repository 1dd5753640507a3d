"""Empirical fit of e_n ~ K * rho^n * n^alpha.

The fit is diagnostic only: it uses floating-point counts and is never
consulted by a verdict.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import InsufficientTerms, NonPositiveTerm

__all__ = ["AsymptoticFit", "fit_asymptotics", "MIN_TERMS"]

MIN_TERMS = 64


@dataclass(frozen=True)
class AsymptoticFit:
    alpha_hat: float
    K_hat: float
    n_used: int
    period: int
    residual: float
    certified: bool = False

    def to_dict(self):
        d = asdict(self)
        d["note"] = "non-certified"
        return d


def _log_scaled(seq, rho):
    """log(e_n) - n log(rho) for every n, computed without overflow."""
    log_rho = math.log(rho)
    terms = seq.terms
    if seq.exact:
        return [math.log(v) - n * log_rho if v > 0 else None for n, v in enumerate(terms)]
    log_scale = math.log(seq.scale)
    return [math.log(v) + n * (log_scale - log_rho) if v > 0 else None for n, v in enumerate(terms)]


def fit_asymptotics(seq, rho, period=None, residue=0):
    """Estimate alpha and K from counts on the residue class ``residue`` mod ``period``.

    Local slopes s(n) = (a_n - a_{n-p}) / (log n - log(n - p)), with
    a_n = log e_n - n log rho, approach alpha like 1/n; one Richardson step
    alpha_hat = 2 s(n) - s(n/2) removes that term.  ``residual`` is the size
    of the correction alpha_hat - s(n).
    """
    p = period or seq.period or 1
    rho = float(rho)
    if rho <= 0:
        raise ValueError("rho must be positive")
    N = len(seq.terms) - 1
    idx = [n for n in range(p if residue % p == 0 else residue % p, N + 1, p)]
    if len(idx) < MIN_TERMS:
        raise InsufficientTerms(f"need at least {MIN_TERMS} terms on the residue class, got {len(idx)}")
    n_top = idx[-1]
    n_half = n_top // 2
    n_half -= (n_half - idx[0]) % p
    if n_half - p < idx[0]:
        raise InsufficientTerms("sequence too short for extrapolation")
    a = _log_scaled(seq, rho)
    # small n may vanish (e_1 = 0 always); only the upper half is used
    bad = [n for n in idx if n >= n_half - p and a[n] is None]
    if bad:
        raise NonPositiveTerm(f"e_{bad[0]} is not positive on residue class {residue} mod {p}")

    def slope(n):
        return (a[n] - a[n - p]) / (math.log(n) - math.log(n - p))

    s_top = slope(n_top)
    s_half = slope(n_half)
    alpha_hat = 2 * s_top - s_half
    tail = idx[-max(1, len(idx) // 10):]
    logs_k = [a[n] - alpha_hat * math.log(n) for n in tail]
    K_hat = math.exp(sum(logs_k) / len(logs_k))
    return AsymptoticFit(alpha_hat, K_hat, n_top, p, alpha_hat - s_top)
