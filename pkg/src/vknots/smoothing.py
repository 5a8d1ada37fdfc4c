"""The three smoothing surgeries on Gauss diagrams.

All three delete one chord and reconnect the strands:

* type 1 (self-crossing, against orientation): the component survives with
  the segment between the over passage and the under passage reversed;
* type 2 (self-crossing): the component splits in two; one loop keeps its
  orientation and the old component slot, the other is reversed and
  appended as the new last component;
* type 3 (crossing of two components): the components merge; the under
  passage's component is traversed in reverse in the merged loop, and the
  merged component takes the smaller slot.

Reversing a segment flips the sign of every crossing with exactly one
passage inside it.  Which segment survives/reverses is pinned by golden
values, not by taste: the type-1 and type-2 choices below reproduce the
published smoothed d-writhes of knot 4.31 and the three-variable span
polynomials of the VK family, and swapping either choice breaks them.
Changing the smoothed crossing before a type-3 smoothing reverses the
merged knot's orientation, which is what makes the flat span machinery
work.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import Diagram, Passage
from .errors import PreconditionError

__all__ = ["smooth1", "smooth2", "smooth3"]


def _flip_signs(component, flips):
    return tuple(
        Passage(p.crossing, p.strand, -p.sign) if p.crossing in flips else p
        for p in component
    )


def _split_at(comp, crossing):
    """Segments strictly between the passages of ``crossing``.

    Returns (X, Y): X follows the over passage up to the under passage,
    Y follows the under passage back around to the over passage.
    """
    n = len(comp)
    i_over = next(i for i, p in enumerate(comp) if p.crossing == crossing and p.over)
    i_under = next(i for i, p in enumerate(comp) if p.crossing == crossing and not p.over)
    x = []
    k = (i_over + 1) % n
    while k != i_under:
        x.append(comp[k])
        k = (k + 1) % n
    y = []
    k = (i_under + 1) % n
    while k != i_over:
        y.append(comp[k])
        k = (k + 1) % n
    return tuple(x), tuple(y)


def _self_crossing_component(d: Diagram, crossing: int, op: str) -> int:
    oc, uc = d.components_of(crossing)
    if oc != uc:
        raise PreconditionError(
            f"{op} requires a self-crossing; crossing {crossing} joins "
            f"components {oc + 1} and {uc + 1}"
        )
    return oc


def _one_sided(x_segment) -> set[int]:
    """Crossings with exactly one passage inside the reversed segment."""
    inside: dict[int, int] = {}
    for p in x_segment:
        inside[p.crossing] = inside.get(p.crossing, 0) + 1
    return {cid for cid, k in inside.items() if k == 1}


def _apply_flips(components, flips) -> tuple:
    return tuple(_flip_signs(comp, flips) for comp in components)


@lru_cache(maxsize=65536)
def smooth1(d: Diagram, crossing: int) -> Diagram:
    """Type-1 smoothing: same component count, one segment reversed.

    The segment entered at the under-passage exit is the one reversed; the
    opposite choice flips the orientation of the result and is rejected by
    the golden three-variable span polynomials of the VK family.
    """
    ci = _self_crossing_component(d, crossing, "type-1 smoothing")
    comp = d.components[ci]
    x, y = _split_at(comp, crossing)
    flips = _one_sided(y)
    comps = list(d.components)
    comps[ci] = x + tuple(reversed(y))
    return Diagram(_apply_flips(comps, flips))


@lru_cache(maxsize=65536)
def smooth2(d: Diagram, crossing: int) -> Diagram:
    """Type-2 smoothing: the component splits; result has one more component.

    The loop entered at the under-passage exit keeps its orientation and the
    old slot; the other loop is reversed and appended last.
    """
    ci = _self_crossing_component(d, crossing, "type-2 smoothing")
    comp = d.components[ci]
    x, y = _split_at(comp, crossing)
    flips = _one_sided(x)
    comps = list(d.components)
    comps[ci] = y
    comps.append(tuple(reversed(x)))
    return Diagram(_apply_flips(comps, flips))


@lru_cache(maxsize=65536)
def smooth3(d: Diagram, crossing: int) -> Diagram:
    """Type-3 smoothing: two components merge; result has one fewer.

    The under passage's component is reversed into the over passage's
    component; the merged loop sits at the smaller of the two slots.
    """
    (oc, oi), (uc, ui) = d.passage_positions(crossing)
    if oc == uc:
        raise PreconditionError(
            f"type-3 smoothing requires a crossing of two components; "
            f"crossing {crossing} is a self-crossing of component {oc + 1}"
        )
    over_comp, under_comp = d.components[oc], d.components[uc]
    s_over = tuple(
        over_comp[(oi + 1 + k) % len(over_comp)] for k in range(len(over_comp) - 1)
    )
    s_under = tuple(
        under_comp[(ui + 1 + k) % len(under_comp)] for k in range(len(under_comp) - 1)
    )
    # Every surviving crossing with exactly one passage on the reversed
    # (under) component flips sign.
    flips = set()
    for cid in d.crossing_ids():
        if cid == crossing:
            continue
        c_o, c_u = d.components_of(cid)
        if (c_o == uc) != (c_u == uc):
            flips.add(cid)
    merged = s_over + tuple(reversed(s_under))
    lo = min(oc, uc)
    comps = [c for k, c in enumerate(d.components) if k not in (oc, uc)]
    comps.insert(lo, merged)
    return Diagram(_apply_flips(comps, flips))
