"""Among all labeled trees with a degree sequence, the BFD tree wins.

The Pruefer enumeration lists every tree; the BFD tree has the largest
spectral radius and (tied, for some sequences, with other shapes) the largest
Randic index.
"""
from graphentropy import bfd_tree, majorizes, randic_index, spectral_radius
from graphentropy.oracle import enumerate_trees, is_isomorphic, tree_count, tree_sequences

for seq in [(3, 2, 1, 1, 1), (3, 3, 2, 2, 1, 1, 1, 1), (4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1)]:
    best, _ = bfd_tree(seq)
    print(seq, f"{tree_count(seq)} labeled trees, BFD lambda = {spectral_radius(best).lam:.6f}")
    if len(seq) > 8:
        continue
    trees = list(enumerate_trees(seq))
    top = max(randic_index(t, 1) for t in trees)
    shapes = []
    for t in trees:
        if randic_index(t, 1) == top and not any(is_isomorphic(t, s) for s in shapes):
            shapes.append(t)
    print(f"  max R_1 = {top:g} (BFD: {randic_index(best, 1):g}) over {len(shapes)} shape(s)")

seqs = tree_sequences(7)
print("majorization chain on 7 vertices:")
for a in seqs:
    above = [b for b in seqs if majorizes(a, b)]
    print(f"  {a} lambda={spectral_radius(bfd_tree(a)[0]).lam:.4f} is majorized by {len(above)}")
