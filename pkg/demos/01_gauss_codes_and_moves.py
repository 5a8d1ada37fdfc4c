"""Gauss codes, diagram surgery, and Reidemeister rewriting.

A virtual link lives in this library as a signed Gauss code: one cyclic
word of crossing passages per component.  This walk-through parses a few
codes, applies the basic symmetries, and shows that randomized move
sequences produce wildly different codes of the same link.
"""

from vknots import (
    crossing_change,
    mirror,
    parse,
    reorder_components,
    reverse_component,
    serialize,
)
from vknots.moves import apply_move, enumerate_moves, random_walk

vtref = parse("O1+O2+U1+U2+")
print("virtual trefoil:", serialize(vtref))
print("  mirror image: ", serialize(mirror(vtref)))
print("  crossing 1 changed:", serialize(crossing_change(vtref, 1)))
print("  reversed:     ", serialize(reverse_component(vtref, 1)))

hopf = parse("O1-;U1-")
print("\nvirtual hopf link:", serialize(hopf))
print("  components exchanged:", serialize(reorder_components(hopf, (2, 1))))

print("\nmove sites on the virtual trefoil:")
sites = enumerate_moves(vtref)
for kind in ("R1-delete", "R2-delete", "R3", "R1-insert", "R2-insert"):
    count = sum(1 for m in sites if m.kind == kind)
    print(f"  {kind:10s}: {count} site(s)")

print("\na 2-crossing kink pair cancels:")
kinked = apply_move(vtref, [m for m in sites if m.kind == "R2-insert"][5])
print("  after an R2 insertion:", serialize(kinked))
deletes = enumerate_moves(kinked, ("R2-delete",))
print("  after deleting it again:", serialize(apply_move(kinked, deletes[0])))

print("\nrandom 40-step walks from the virtual trefoil (seeded):")
for seed in (1, 2, 3):
    w = random_walk(vtref, 40, seed, max_crossings=10)
    print(f"  seed {seed}: {w.n_crossings} crossings  {serialize(w)[:60]}...")
print("all of these are diagrams of the same virtual knot.")
