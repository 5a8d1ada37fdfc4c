"""Arc labels, crossing indices, and the affine index polynomial.

The labels step by -sign on the over strand and +sign on the under strand
of every crossing, so they only see the underlying flat diagram.  The
index of a crossing is the resulting label imbalance, and summing
sign(c) * (t^index(c) - 1) gives the affine index polynomial.
"""

from vknots import arc_labeling, crossing_index, crossing_sign, parse
from vknots.invariants import affine_index_poly, dwrithe, writhe_n
from vknots.moves import random_walk

vtref = parse("O1+O2+U1+U2+")
print("virtual trefoil:", vtref)
print("  arc labels along the traversal:", arc_labeling(vtref).component_labels(0))
for c in vtref.crossing_ids():
    print(f"  crossing {c}: sign {crossing_sign(vtref, c):+d}, "
          f"index {crossing_index(vtref, c):+d}")
print("  P(t) =", affine_index_poly(vtref))
print("  J_1 =", writhe_n(vtref, 1), " J_-1 =", writhe_n(vtref, -1),
      " dJ_1 =", dwrithe(vtref, 1))

trefoil = parse("O1+U2+O3+U1+O2+U3+")
print("\nclassical trefoil:", trefoil)
print("  indices:", [crossing_index(trefoil, c) for c in trefoil.crossing_ids()])
print("  P(t) =", affine_index_poly(trefoil),
      "(the polynomial vanishes on every classical knot)")

print("\ninvariance under a 60-step random rewrite of the virtual trefoil:")
moved = random_walk(vtref, 60, seed=7, max_crossings=12)
print(f"  {moved.n_crossings}-crossing diagram, P(t) =", affine_index_poly(moved))
