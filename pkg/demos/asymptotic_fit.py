"""Compare fitted exponents with certified ones on a few table step sets.

The fit uses double-precision counts and is only a sanity check.
Run with ``python3 demos/asymptotic_fit.py [N]`` (default N = 600).
"""
import sys

from qwalk import count_excursions, fit_asymptotics, lattice_period, recover_fixture_stepsets
from qwalk.numsolve import alpha_from_c, eval_c, eval_rho, solve_critical_point

N = int(sys.argv[1]) if len(sys.argv) > 1 else 600
sets = recover_fixture_stepsets()

print(f"{'tag':>4} {'rho':>10} {'alpha (certified)':>18} {'alpha_hat':>10} {'K_hat':>9}")
for tag in ("7", "23", "30", "40", "51"):
    s = sets[tag][0]
    cp = solve_critical_point(s)
    rho = float(eval_rho(s, cp))
    alpha = float(alpha_from_c(eval_c(s, cp)))
    fit = fit_asymptotics(count_excursions(s, N, mode="float"), rho, lattice_period(s))
    print(f"{tag:>4} {rho:10.6f} {alpha:18.6f} {fit.alpha_hat:10.6f} {fit.K_hat:9.4f}")
