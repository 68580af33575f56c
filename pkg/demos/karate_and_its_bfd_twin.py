"""Zachary's karate club next to a BFD-ordered graph with the same degrees.

Keeping the degree sequence fixed and wiring hubs to hubs raises every
Randic index and the spectral radius, and pushes assortativity up.
"""
from pathlib import Path

from graphentropy import (assortativity_r, bfd_realize, degree_sequence, normalized_randic,
                          randic_index, read_graph, spectral_radius)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "soc-karate.mtx"

g = read_graph(DATA)
h, ordering = bfd_realize(degree_sequence(g))
print(f"n={g.n} m={g.m} d_max={degree_sequence(g)[0]}")
print(f"BFD root {ordering.order[0]}, layer sizes",
      [sum(1 for v in range(h.n) if ordering.layer[v] == k) for k in range(max(ordering.layer) + 1)])

print(f"{'':10}{'original':>14}{'BFD':>14}")
for a in (0.5, 1, 2):
    print(f"R_{a:<8g}{randic_index(g, a):14.5g}{randic_index(h, a):14.5g}")
    print(f"Rbar_{a:<6g}{normalized_randic(g, a):14.5g}{normalized_randic(h, a):14.5g}")
print(f"{'lambda/2':10}{spectral_radius(g).lam / 2:14.5g}{spectral_radius(h).lam / 2:14.5g}")
print(f"{'r':10}{assortativity_r(g):14.5g}{assortativity_r(h):14.5g}")
