"""Where does the normalized Randic function peak on a random graph?

log2 Rbar_alpha and H_E - H_V meet twice: at alpha = 0, where both equal
log2(d_avg / 2), and at the maximizer alpha*, where the slope vanishes.
Everything stays below log2(lambda / 2).
"""
import math

import numpy as np

from graphentropy import alpha_sweep, generate_er, log_randic_derivative

g = generate_er(50, 0.2, seed=7)
prof = alpha_sweep(g)
star = prof.alpha_star
print(f"ER(50, 0.2): m={g.m}, d_avg={2 * g.m / g.n:.3f}")
print(f"alpha* = {star.alpha:.6f}, Rbar* = {star.rbar:.6f}, slope there {log_randic_derivative(g, star.alpha):.1e}")
print(f"log2(lambda/2) = {prof.log2_half_lambda:.6f}, max log2 Rbar = {prof['logRbar'].max():.6f}")
print("curves cross at", [round(c, 4) for c in prof.crossings()])
print(f"log2(d_avg/2) = {math.log2(g.m / g.n):.6f}")

# a coarse text plot of the gap H_E - H_V - log2 Rbar
for a in np.arange(-2, 4.01, 0.5):
    i = int(np.argmin(np.abs(prof.grid - a)))
    gap = prof["HE"][i] - prof["HV"][i] - prof["logRbar"][i]
    print(f"{a:5.1f} {gap:+.4f} " + "#" * int(40 * min(abs(gap), 1)))
