"""Smoothed difference writhes and the F-polynomial tower on knot 4.31.

Type-1 smoothing a crossing leaves a knot whose difference writhes refine
the index data.  The two-variable F-polynomials, the (n,m)-difference
writhe, and the three-variable generalization all come from attaching
those smoothed values to each crossing.  Knot 4.31 is the standard
example: its own difference writhes vanish, but the smoothed ones do not.
"""

from vknots import crossing_index, crossing_sign, lookup
from vknots.invariants import (
    affine_index_poly,
    dwrithe,
    dwrithe_nm,
    f_poly,
    f_poly_nmk,
)
from vknots.smoothing import smooth1

k431 = lookup("K431").diagram()
names = {1: "alpha", 2: "beta", 3: "gamma", 4: "delta"}
print("virtual knot 4.31:", k431)
for c in (1, 2, 3, 4):
    print(f"  {names[c]:6s} sign {crossing_sign(k431, c):+d} "
          f"index {crossing_index(k431, c):+d}")
print("  dJ_1 =", dwrithe(k431, 1), " dJ_2 =", dwrithe(k431, 2))

for c in (1, 2):
    s = smooth1(k431, c)
    print(f"\nsmoothed at {names[c]}: {s}")
    print(f"  dJ_1 = {dwrithe(s, 1):+d}  dJ_2 = {dwrithe(s, 2):+d}")

print("\n(1,1)-difference writhe of 4.31:", dwrithe_nm(k431, 1, 1))
print("F^1(t,l) =", f_poly(k431, 1))
print("F^{1,1,1}(t,l1,l2) =", f_poly_nmk(k431, 1, 1, 1))

kprime = lookup("KPRIME").diagram()
print("\nthe knot K' hides from the two-variable family:")
print("  P(t) =", affine_index_poly(kprime))
print("  F^1  =", f_poly(kprime, 1))
print("  F^2  =", f_poly(kprime, 2))
print("  but F^{1,1,1} =", f_poly_nmk(kprime, 1, 1, 1))
