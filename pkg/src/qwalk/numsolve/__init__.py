"""Certified numerics: dyadic intervals, real roots, and the critical point of chi."""
from .critical import (
    CriticalPoint,
    alpha_from_c,
    eval_c,
    eval_rho,
    float_critical_point,
    solve_critical_point,
)
from .interval import (
    DEFAULT_PRECISION,
    DyadicInterval,
    arccos_interval,
    atan_interval,
    pi_interval,
    precision_cap,
    precision_schedule,
    to_decimal,
    within_half_ulp,
)
from .roots import AlgebraicNumber, descartes_count, isolate_real_roots, match_root, sign_at

__all__ = [
    "AlgebraicNumber",
    "CriticalPoint",
    "DEFAULT_PRECISION",
    "DyadicInterval",
    "alpha_from_c",
    "arccos_interval",
    "atan_interval",
    "descartes_count",
    "eval_c",
    "eval_rho",
    "float_critical_point",
    "isolate_real_roots",
    "match_root",
    "pi_interval",
    "precision_cap",
    "precision_schedule",
    "sign_at",
    "solve_critical_point",
    "to_decimal",
    "within_half_ulp",
]
