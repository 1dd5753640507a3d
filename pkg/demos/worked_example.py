"""Step-by-step certification for the step set {W, N, E, SE, S}.

Run with ``python3 demos/worked_example.py``.
"""
from qwalk import (
    char_poly,
    count_excursions,
    eliminant_c,
    eliminant_rho,
    match_root,
    non_dfinite_verdict,
    parse_stepset,
    rootofunity_sweep,
)
from qwalk.bigpoly import chebyshev_double_cover, parse_poly
from qwalk.numsolve import alpha_from_c, eval_c, eval_rho, solve_critical_point, to_decimal
from qwalk.stepset import partials

s = parse_stepset("(-1,0),(0,1),(1,0),(1,-1),(0,-1)")

# 1. characteristic polynomial and the critical-point system
chi = char_poly(s)
d = partials(chi)
print("chi   =", chi)
print("chi_x =", d.chi_x.format())
print("chi_y =", d.chi_y.format())

# excursions e_0..e_12, exact
print("e_n   =", count_excursions(s, 12).terms)

# 2. certified critical point, growth constant and correlation
cp = solve_critical_point(s, 128)
print("x0, y0 ~", float(cp.x0), float(cp.y0), "(certified:", cp.certified, ")")
rho_iv, c_iv = eval_rho(s, cp), eval_c(s, cp)
print("rho   =", to_decimal(rho_iv))
print("c     =", to_decimal(c_iv))

# 3. eliminants; each keeps the target as one of its real roots
E_rho, E_c = eliminant_rho(s), eliminant_c(s)
print("E_rho =", E_rho)
print("E_c   =", E_c)
rho = match_root(E_rho.poly, lambda p: eval_rho(s, solve_critical_point(s, p)))
c = match_root(E_c.poly, lambda p: eval_c(s, solve_critical_point(s, p)))
print("rho isolated in [%.12f, %.12f]" % (float(rho.lo), float(rho.hi)))

# 4. root-of-unity test on the factor carrying c
mu_c = parse_poly("8*t^3+8*t^2+6*t+1")
print("R(x)  =", chebyshev_double_cover(mu_c).format("x"))
print("cyclotomic factors of R:", rootofunity_sweep(mu_c))
print("cyclotomic factors for the whole eliminant:", rootofunity_sweep(E_c.poly))

# 5. exponent and verdict
print("alpha =", to_decimal(alpha_from_c(c_iv)))
v = non_dfinite_verdict(s)
print("verdict:", v.conclusion, "via", v.certificate.method)
if v.certificate.note:
    print("note:", v.certificate.note)
