"""Walks with D-finite generating functions: the pipeline must not claim non-D-finiteness.

Run with ``python3 demos/negative_controls.py``.
"""
from qwalk import KREWERAS, SIMPLE_WALK, group_order_from_alpha, non_dfinite_verdict, parse_stepset

for name, s in (("simple walk", SIMPLE_WALK), ("Kreweras", KREWERAS)):
    v = non_dfinite_verdict(s)
    q, N = v.certificate.witness
    print(f"{name:12s} {v.conclusion:13s} arccos(c)/pi = {q} (N = {N}), alpha = {v.alpha_exact}, "
          f"group order {group_order_from_alpha(v.alpha_exact)}")
    for cav in v.caveats:
        print(" " * 13, "caveat:", cav)

# a singular step set confined to a half-plane fails the hypotheses outright
s = parse_stepset("(-1,1),(1,1),(1,-1)")
v = non_dfinite_verdict(s)
print(f"{'singular':12s} {v.conclusion:13s}", v.diagnostics[0])
