"""Pipeline orchestration, fixture recovery, table checks and JSON reports."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .asymptotics import fit_asymptotics
from .bigpoly import divides
from .elim import eliminant_c, eliminant_rho
from .enumeration import count_excursions, lattice_period
from .errors import QwalkError, UnmatchedFixture
from .fixtures import FIXTURES, TABLE2_GROUPS
from .irrational import INCONCLUSIVE, RATIONAL_WITNESS, non_dfinite_verdict
from .numsolve import (
    DEFAULT_PRECISION,
    DyadicInterval,
    alpha_from_c,
    eval_c,
    eval_rho,
    match_root,
    precision_schedule,
    solve_critical_point,
    to_decimal,
    within_half_ulp,
)
from .stepset import (
    StepSet,
    char_poly,
    format_stepset,
    is_half_plane_confined,
    is_singular,
)

__all__ = [
    "SCHEMA_VERSION",
    "ClassificationReport",
    "classify",
    "recover_fixture_stepsets",
    "matched_tag",
    "RowCheck",
    "TableCheck",
    "check_tables",
    "interval_json",
]

SCHEMA_VERSION = "1"
SMALL_STEPS = tuple((a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0))


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------

def _decimal_bound(q, digits, up):
    """Decimal string of q rounded outward (up or down) at ``digits`` places after the point."""
    scale = 10 ** digits
    v = q * scale
    n = -((-v.numerator) // v.denominator) if up else v.numerator // v.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def interval_json(iv, digits=20):
    """Outward-rounded decimal endpoints of an interval."""
    return {"lo": _decimal_bound(iv.lo_q, digits, False), "hi": _decimal_bound(iv.hi_q, digits, True)}


def _algebraic_decimal(a, digits=10):
    for bits in precision_schedule(64):
        d = to_decimal(a.enclosure(bits), digits)
        if d is not None:
            return d, a.enclosure(bits)
    return None, a.enclosure(64)


def _alpha_decimal(c, digits=10):
    for bits in precision_schedule(64):
        iv = alpha_from_c(c.enclosure(bits))
        d = to_decimal(iv, digits)
        if d is not None:
            return d, iv
    return None, iv


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _all_small_sequences():
    out = {}
    for k in range(1, len(SMALL_STEPS) + 1):
        for combo in combinations(SMALL_STEPS, k):
            s = StepSet(combo)
            out[s] = count_excursions(s, 8).terms
    return out


@lru_cache(maxsize=1)
def recover_fixture_stepsets():
    """Map each fixture tag to the small-step sets whose e_0..e_8 equal its sequence."""
    seqs = _all_small_sequences()
    out = {}
    for tag, fx in FIXTURES.items():
        matches = tuple(s for s, seq in seqs.items() if seq == fx.sequence)
        if not matches:
            raise UnmatchedFixture(f"no small-step set reproduces the sequence of tag {tag}")
        out[tag] = matches
    return out


def matched_tag(s):
    """Comma-joined tags whose sequence equals the first nine excursion counts of ``s``."""
    seq = count_excursions(s, 8).terms
    tags = [t for t, fx in FIXTURES.items() if fx.sequence == seq]
    return ",".join(sorted(tags, key=int)) if tags else None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass
class ClassificationReport:
    schema: str
    steps: str
    chi: str
    small_step: bool
    singular: bool | None
    half_plane: list | None
    period: int | None
    excursions: list
    rho: dict | None
    c: dict | None
    alpha: dict | None
    certificate: dict | None
    verdict: dict
    asymptotic_fit: dict | None
    matched_tag: str | None
    failure: str | None = None

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d):
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    @property
    def conclusion(self):
        return self.verdict["conclusion"]

    def to_text(self):
        lines = [
            f"steps        {self.steps}",
            f"chi          {self.chi}",
            f"verdict      {self.conclusion}",
        ]
        if self.half_plane is not None:
            lines.append(f"half-plane   {self.half_plane[0]}*x + {self.half_plane[1]}*y >= 0")
        if self.rho:
            lines.append(f"rho          {self.rho['decimal']}   root of {self.rho['annihilator']}")
        if self.c:
            lines.append(f"c            {self.c['decimal']}   root of {self.c['annihilator']}")
        if self.alpha:
            exact = f" (exact {self.alpha['exact']})" if self.alpha.get("exact") else ""
            lines.append(f"alpha        {self.alpha['decimal']}{exact}")
        if self.certificate:
            cert = self.certificate
            extra = ""
            if cert.get("witness"):
                extra = f", arccos(c)/pi = {cert['witness']['arccos_over_pi']}"
            lines.append(f"certificate  {cert['method']} (degree bound {cert['degree_bound']}{extra})")
        lines.append(f"period       {self.period}")
        lines.append("excursions   " + ", ".join(str(e) for e in self.excursions))
        if self.matched_tag:
            lines.append(f"table tag    {self.matched_tag}")
        if self.asymptotic_fit:
            fit = self.asymptotic_fit
            lines.append(f"fit          alpha_hat {fit['alpha_hat']:.6f}, K_hat {fit['K_hat']:.6f} "
                         f"(n = {fit['n_used']}, non-certified)")
        for d in self.verdict.get("diagnostics", []):
            lines.append(f"note         {d}")
        for cav in self.verdict.get("caveats", []):
            lines.append(f"caveat       {cav}")
        if self.failure:
            lines.append(f"failure      {self.failure}")
        return "\n".join(lines)


def classify(s, max_n=12, bits=DEFAULT_PRECISION, fit_n=None):
    """Full pipeline on one step set."""
    witness = is_half_plane_confined(s)
    singular = is_singular(s) if s.small_step else None
    period = lattice_period(s)
    excursions = list(count_excursions(s, max_n).terms)
    tag = matched_tag(s) if s.small_step else None
    failure = None
    rho_json = c_json = alpha_json = cert_json = fit_json = None
    verdict = non_dfinite_verdict(s, bits)
    if verdict.rho is not None:
        dec, iv = _algebraic_decimal(verdict.rho)
        rho_json = {"annihilator": verdict.eliminants["rho"].poly.format("t"), "interval": interval_json(iv),
                    "decimal": dec}
        dec, iv = _algebraic_decimal(verdict.c)
        c_json = {"annihilator": verdict.eliminants["c"].poly.format("t"), "interval": interval_json(iv),
                  "decimal": dec}
        if verdict.alpha_exact is not None:
            a = verdict.alpha_exact
            iv = DyadicInterval.point(a, bits)
            alpha_json = {"interval": interval_json(iv), "decimal": to_decimal(iv), "exact": str(a)}
        else:
            dec, iv = _alpha_decimal(verdict.c)
            alpha_json = {"interval": interval_json(iv), "decimal": dec, "exact": None}
        cert_json = verdict.certificate.to_dict()
    if verdict.diagnostics and verdict.rho is None and verdict.conclusion != "HypothesisFailed":
        failure = "; ".join(verdict.diagnostics)
    if fit_n and witness is None and verdict.rho is not None:
        try:
            seq = count_excursions(s, fit_n, mode="float")
            fit_json = fit_asymptotics(seq, float(verdict.rho), period or 1).to_dict()
        except QwalkError as exc:
            fit_json = {"error": f"{type(exc).__name__}: {exc}", "note": "non-certified"}
    verdict_json = {
        "conclusion": verdict.conclusion,
        "hypotheses": verdict.hypotheses,
        "diagnostics": verdict.diagnostics,
        "caveats": verdict.caveats,
        "inconclusive": verdict.hypotheses.get("certificate") == INCONCLUSIVE,
    }
    return ClassificationReport(
        schema=SCHEMA_VERSION,
        steps=format_stepset(s),
        chi=char_poly(s).format(),
        small_step=s.small_step,
        singular=singular,
        half_plane=list(witness) if witness is not None else None,
        period=period,
        excursions=excursions,
        rho=rho_json,
        c=c_json,
        alpha=alpha_json,
        certificate=cert_json,
        verdict=verdict_json,
        asymptotic_fit=fit_json,
        matched_tag=tag,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# table checks
# ---------------------------------------------------------------------------

@dataclass
class RowCheck:
    tag: str
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass
class TableCheck:
    table: int
    rows: list

    @property
    def passed(self):
        return sum(1 for r in self.rows if r.passed)

    @property
    def total(self):
        return len(self.rows)

    @property
    def ok(self):
        return self.passed == self.total

    def summary(self):
        return f"table {self.table}: {self.passed}/{self.total} pass"


def _expand_tags(tags):
    if tags is None:
        return sorted(FIXTURES, key=int)
    if isinstance(tags, str):
        tags = [tags]
    out = []
    for t in tags:
        t = t.replace(" ", "").rstrip("*")
        if t in TABLE2_GROUPS:
            out.extend(TABLE2_GROUPS[t][0])
        elif t.startswith("("):
            out.extend(x.rstrip("*") for x in t.strip("()").split(","))
        else:
            out.append(t)
    for t in out:
        if t not in FIXTURES:
            raise KeyError(f"unknown tag {t}")
    return list(dict.fromkeys(out))


def _check_table1_row(tag, sets, bits):
    fx = FIXTURES[tag]
    details = {"step_sets": [format_stepset(s) for s in sets]}
    ok = True
    for s in sets:
        seq = count_excursions(s, 8).terms
        period = lattice_period(s)
        cp = solve_critical_point(s, bits)
        rho = eval_rho(s, cp)
        alpha = alpha_from_c(eval_c(s, cp))
        row = {
            "sequence": seq == fx.sequence,
            "period": (period == 2) == fx.starred,
            "odd_terms_zero": (not fx.starred) or all(e == 0 for e in seq[1::2]),
            "rho": within_half_ulp(rho, fx.rho_decimal),
            "alpha": within_half_ulp(-alpha, fx.alpha_decimal),
            "rho_decimal": to_decimal(rho),
            "alpha_decimal": to_decimal(alpha),
        }
        details[format_stepset(s)] = row
        ok = ok and all(v for k, v in row.items() if not k.endswith("_decimal"))
    return RowCheck(tag, ok, details)


def _check_table2_row(tag, sets, bits):
    fx = FIXTURES[tag]
    mu_rho, mu_c = fx.mu_rho, fx.mu_c
    details = {"group": fx.group}
    ok = True
    for s in sets:
        row = {}
        try:
            E_rho, E_c = eliminant_rho(s), eliminant_c(s)
            row["mu_rho_divides"] = divides(mu_rho, E_rho.poly)
            row["mu_c_divides"] = divides(mu_c, E_c.poly)

            def rho_t(prec):
                return eval_rho(s, solve_critical_point(s, prec))

            def c_t(prec):
                return eval_c(s, solve_critical_point(s, prec))

            r_e, r_mu = match_root(E_rho.poly, rho_t), match_root(mu_rho, rho_t)
            c_e, c_mu = match_root(E_c.poly, c_t), match_root(mu_c, c_t)
            row["rho_root_coincides"] = not (r_e.hi < r_mu.lo or r_mu.hi < r_e.lo)
            row["c_root_coincides"] = not (c_e.hi < c_mu.lo or c_mu.hi < c_e.lo)
        except QwalkError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        details[format_stepset(s)] = row
        ok = ok and "error" not in row and all(row.values())
    return RowCheck(tag, ok, details)


def check_tables(table=1, tags=None, bits=DEFAULT_PRECISION):
    """Regression check of the reference tables against recomputed values."""
    if table not in (1, 2):
        raise ValueError("table must be 1 or 2")
    recovered = recover_fixture_stepsets()
    rows = []
    for tag in _expand_tags(tags):
        sets = recovered[tag]
        if table == 1:
            rows.append(_check_table1_row(tag, sets, bits))
        else:
            rows.append(_check_table2_row(tag, sets, bits))
    return TableCheck(table, rows)


def alpha_exact_of(report):
    """Exact alpha of a report carrying a rational witness, else None."""
    if report.alpha and report.alpha.get("exact"):
        return Fraction(report.alpha["exact"])
    return None


def is_rational_witness(report):
    return bool(report.certificate and report.certificate["method"] == RATIONAL_WITNESS)
