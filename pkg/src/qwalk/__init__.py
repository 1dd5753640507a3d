"""Certified non-D-finiteness of quarter-plane excursion generating functions."""
from .asymptotics import AsymptoticFit, fit_asymptotics
from .bigpoly import IntPoly, MPoly, cyclotomic, divides, parse_poly, resultant, squarefree_part
from .elim import Eliminant, eliminant_c, eliminant_rho
from .enumeration import ExcursionSeq, count_excursions, lattice_period, weighted_excursion_prob
from .errors import QwalkError
from .fixtures import FIXTURES, WORKED_EXAMPLE
from .irrational import (
    IrrationalityCertificate,
    Verdict,
    alpha_from_witness,
    certify_alpha_irrational,
    group_order_from_alpha,
    non_dfinite_verdict,
    rootofunity_sweep,
)
from .numsolve import AlgebraicNumber, DyadicInterval, match_root, solve_critical_point
from .report import ClassificationReport, check_tables, classify, recover_fixture_stepsets
from .stepset import KREWERAS, SIMPLE_WALK, StepSet, char_poly, parse_stepset

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "AsymptoticFit",
    "ClassificationReport",
    "DyadicInterval",
    "Eliminant",
    "ExcursionSeq",
    "FIXTURES",
    "IntPoly",
    "IrrationalityCertificate",
    "KREWERAS",
    "MPoly",
    "QwalkError",
    "SIMPLE_WALK",
    "StepSet",
    "Verdict",
    "WORKED_EXAMPLE",
    "alpha_from_witness",
    "certify_alpha_irrational",
    "char_poly",
    "check_tables",
    "classify",
    "count_excursions",
    "cyclotomic",
    "divides",
    "eliminant_c",
    "eliminant_rho",
    "fit_asymptotics",
    "group_order_from_alpha",
    "lattice_period",
    "match_root",
    "non_dfinite_verdict",
    "parse_poly",
    "parse_stepset",
    "recover_fixture_stepsets",
    "resultant",
    "rootofunity_sweep",
    "solve_critical_point",
    "squarefree_part",
    "weighted_excursion_prob",
]
