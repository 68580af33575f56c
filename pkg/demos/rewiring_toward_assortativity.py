"""Hill-climb R_1 with degree-preserving switches and watch r rise."""
from graphentropy import (apply_switch, assortativity_r, generate_er, maximize_randic,
                          normalized_randic, spectral_radius)

g = generate_er(40, 0.12, seed=11)
res = maximize_randic(g, alpha=1.0)
print(f"{len(res.trace)} switches, R_1 {res.initial_R:g} -> {res.trace[-1].R:g}")

h = g
checkpoints = {0: assortativity_r(g)}
for t in res.trace:
    h = apply_switch(h, t.switch)
    if t.step % 5 == 0 or t.step == len(res.trace):
        checkpoints[t.step] = assortativity_r(h)
for step, r in checkpoints.items():
    print(f"step {step:3d}  r = {r:+.4f}")

# the spectral lower bound 2 Rbar_1 climbs with R_1
for label, graph in (("start", g), ("end", res.graph)):
    print(f"{label}: 2 Rbar_1 = {2 * normalized_randic(graph, 1):.4f} <= lambda = "
          f"{spectral_radius(graph).lam:.4f}")
