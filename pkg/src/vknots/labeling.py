"""Integer arc labels and the crossing index of a virtual knot diagram.

Arcs are the gaps between consecutive passages along a component.  The
label step taken when walking through a passage depends on the crossing
sign: at a positive crossing the over strand decrements and the under
strand increments; at a negative crossing the roles swap.  Equivalently,

    step = -sign  on the over strand,   step = +sign  on the under strand.

This is the orientation-only rule of Cheng colorings, so the labels (and
everything built from them) only see the underlying flat diagram.

With ``o`` and ``u`` the labels entering the over and under strand, the
index of a crossing is

    ind(c) = o - u - sign(c),

i.e. the decrementing strand's incoming label minus the incrementing
strand's, minus one.  Labels are pinned to 0 on each component's first arc;
the index is independent of that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram
from .errors import InconsistentLabelingError, PreconditionError

__all__ = ["ArcLabeling", "arc_labeling", "crossing_sign", "crossing_index", "index_map"]


def _step(passage) -> int:
    return -passage.sign if passage.over else passage.sign


@dataclass(frozen=True)
class ArcLabeling:
    """Labels keyed by ``(component, position)``: the arc entering passage
    ``position`` of that component.  A crossing-free component has the single
    key ``(component, 0)``."""

    labels: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.labels)

    def component_labels(self, component: int) -> tuple[int, ...]:
        return tuple(v for (c, _), v in self.labels if c == component)


@lru_cache(maxsize=65536)
def arc_labeling(d: Diagram) -> ArcLabeling:
    """Compute the arc labeling, base label 0 on each component's first arc.

    Exists iff every component's passage steps sum to zero; otherwise raises
    InconsistentLabelingError naming the first offending component (possible
    only for multi-component diagrams).
    """
    labels: list[tuple[tuple[int, int], int]] = []
    for ci, comp in enumerate(d.components):
        if not comp:
            labels.append(((ci, 0), 0))
            continue
        if sum(_step(p) for p in comp) != 0:
            raise InconsistentLabelingError(ci + 1)
        cur = 0
        for pi, p in enumerate(comp):
            labels.append(((ci, pi), cur))
            cur += _step(p)
    return ArcLabeling(tuple(labels))


def crossing_sign(d: Diagram, crossing: int) -> int:
    """The stored sign of a crossing."""
    return d.sign(crossing)


@lru_cache(maxsize=65536)
def index_map(d: Diagram) -> dict[int, int]:
    """Index of every crossing of a one-component diagram."""
    if d.n_components != 1:
        raise PreconditionError(
            "crossing index is defined for knot diagrams only "
            f"(got {d.n_components} components)"
        )
    labels = arc_labeling(d).as_dict()
    out = {}
    for cid in d.crossing_ids():
        (oc, oi), (uc, ui) = d.passage_positions(cid)
        o = labels[(oc, oi)]
        u = labels[(uc, ui)]
        out[cid] = o - u - d.sign(cid)
    return out


def crossing_index(d: Diagram, crossing: int) -> int:
    """ind(c) of a crossing of a knot diagram."""
    m = index_map(d)
    if crossing not in m:
        raise PreconditionError(f"unknown crossing id {crossing}")
    return m[crossing]
