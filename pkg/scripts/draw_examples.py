#!/usr/bin/env python3
"""Print the two concatenation diagrams and the Franklin moves used as running examples."""

from twocolored import bipartition as bp
from twocolored.franklin import franklin_stats, franklin_step_even, halve_even

for beta, alpha in [((9, 5, 3, 1), (7, 1)), ((13, 9, 5, 3, 1), (9, 7, 3))]:
    sys = bp.build_system(beta, alpha)
    d, t = bp.d_and_t(sys)
    c, mu = bp.diagram_to_residual(bp.to_diagram(sys))
    print(f"beta={beta} alpha={alpha}  c={c} d={d} t={t}  residual={mu}")
    print(bp.render(sys))
    print()

for evens in [(10, 8, 4, 2), (12, 10, 6), (10, 8, 6), (8, 6)]:
    s, sigma, k = franklin_stats(halve_even(evens))
    out = franklin_step_even(evens)
    target = out.image if out.kind == "moved" else f"fixed m={out.m} ({out.sign})"
    print(f"{evens}: s={s} sigma={sigma} k={k} -> {target}")
