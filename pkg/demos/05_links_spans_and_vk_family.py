"""Linking spans of two-component links and the three-variable polynomials.

Virtual links can have unequal over- and under-linking numbers; their
difference (the span) survives all moves, and its refinement by the
difference writhes of type-3 smoothings survives crossing changes after
symmetrization.  Feeding those flat spans of type-2 smoothings back into
a knot polynomial separates the knots VK3 and VK4, which the whole
two-variable family fails to tell apart.
"""

from vknots import lookup, parse, reorder_components
from vknots.invariants import (
    f_poly,
    fspan_nk,
    linking_numbers,
    span_nk,
    tilde_f,
)

hopf = parse("O1-;U1-")
lk = linking_numbers(hopf)
print("virtual hopf link:", hopf)
print(f"  over-linking {lk.over:+d}, under-linking {lk.under:+d}, "
      f"span {lk.span:+d}")
swapped = linking_numbers(reorder_components(hopf, (2, 1)))
print(f"  after exchanging components: over {swapped.over:+d}, "
      f"under {swapped.under:+d}")
print("  span_{1,0} =", span_nk(hopf, 1, 0),
      " fspan_{1,0} =", fspan_nk(hopf, 1, 0))

vk3 = lookup("VK3").diagram()
vk4 = lookup("VK4").diagram()
print(f"\nVK3 has {vk3.n_crossings} crossings, VK4 has {vk4.n_crossings}.")
print("two-variable polynomials agree:")
print("  F^2(VK3) == F^2(VK4):", f_poly(vk3, 2) == f_poly(vk4, 2))

for k, m in ((2, 0), (2, 2)):
    a = tilde_f(vk3, 2, k, m)
    b = tilde_f(vk4, 2, k, m)
    print(f"\nthree-variable span polynomial, (k,m) = ({k},{m}):")
    print("  VK3:", a)
    print("  VK4:", b)
    print("  distinct:", a != b)
