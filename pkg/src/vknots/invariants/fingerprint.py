"""Flat-class fingerprints and sound nonzero certificates for flat sums.

A fingerprint is a vector of flat invariants of a diagram: difference
writhes and their (n,m) refinements for knots, pairwise spans and flat
spans of two-component sublinks, the same data for each component viewed
alone, and (below a depth bound) the bucketed flat B-sums of every
component.  Equal flat classes have equal fingerprints, so bucketing the
terms of a formal sum by fingerprint and finding a bucket with nonzero
total coefficient certifies that the sum is nonzero; nothing here ever
certifies equality.

One wrinkle: a kink move changes a B-sum by one term whose class is the
diagram with an unknot added (in one of two computable ways).  Raw bucket
maps therefore survive crossing changes but not kink moves; the
move-transferable form drops the buckets carrying those two class
fingerprints.  Dropping whole fingerprint buckets is class-consistent, so
the restricted map is a genuine invariant, and the restriction is applied
to the nested B-sum data inside fingerprints for the same reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..diagram import Diagram, reverse_component
from .flatsums import FlatSum, b_flat_sum
from .spans import fspan_nk, linking_numbers
from .writhes import dwrithe, dwrithe_nm

__all__ = [
    "Fingerprint",
    "fingerprint",
    "flatsum_fingerprint",
    "flatsum_nonzero",
    "kink_class_fingerprints",
    "restricted_flatsum_fingerprint",
    "DEFAULT_WINDOW",
    "DEFAULT_DEPTH",
]

DEFAULT_WINDOW = 3
DEFAULT_DEPTH = 2


@dataclass(frozen=True)
class Fingerprint:
    data: tuple

    def render(self) -> str:
        return repr(self.data)


def _sublink(d: Diagram, keep: tuple[int, ...]) -> Diagram:
    """Delete all components outside ``keep`` (0-based, order preserved),
    dropping every crossing that touches a deleted component."""
    kept = set(keep)
    dropped_crossings = {
        c for c in d.crossing_ids()
        if not set(d.components_of(c)) <= kept
    }
    return Diagram(tuple(
        tuple(p for p in d.components[ci] if p.crossing not in dropped_crossings)
        for ci in keep
    ))


def _knot_vector(d: Diagram, window: int) -> tuple:
    dj = tuple(dwrithe(d, n) for n in range(1, window + 1))
    djnm = tuple(
        dwrithe_nm(d, n, m)
        for n in range(1, window + 1)
        for m in range(1, window + 1)
    )
    return ("dj", dj, "djnm", djnm)


def _pair_vector(d: Diagram, window: int) -> tuple:
    lk = linking_numbers(d)
    fs = tuple(
        fspan_nk(d, n, k)
        for n in range(1, window + 1)
        for k in range(0, window + 1)
    )
    return ("span", lk.span, "fspan", fs)


@lru_cache(maxsize=65536)
def kink_class_fingerprints(d: Diagram, i: int, depth: int,
                            window: int) -> frozenset:
    """Fingerprints of the two classes a kink smoothing on component i can
    produce: the diagram with an unknot appended, and the diagram with
    component i replaced by an unknot and its reverse appended."""
    with_circle = Diagram(d.components + ((),))
    rev = reverse_component(d, i)
    comps = list(rev.components)
    moved = comps[i - 1]
    comps[i - 1] = ()
    comps.append(moved)
    swapped = Diagram(tuple(comps))
    return frozenset(
        fingerprint(x, depth, window).data for x in (with_circle, swapped)
    )


@lru_cache(maxsize=65536)
def fingerprint(d: Diagram, depth: int = DEFAULT_DEPTH,
                window: int = DEFAULT_WINDOW) -> Fingerprint:
    """Flat invariant vector of an ordered oriented diagram."""
    n = d.n_components
    data: list = [("ncomp", n)]
    if n == 1:
        data.append(_knot_vector(d, window))
    else:
        for ci in range(n):
            data.append(("component", ci + 1,
                         _knot_vector(_sublink(d, (ci,)), window)))
        for i in range(n):
            for j in range(i + 1, n):
                data.append(("pair", i + 1, j + 1,
                             _pair_vector(_sublink(d, (i, j)), window)))
    if depth > 0:
        for i in range(1, n + 1):
            buckets = restricted_flatsum_fingerprint(
                b_flat_sum(d, i), d, i, depth - 1, window
            )
            data.append(("bflat", i, buckets))
    return Fingerprint(tuple(data))


def flatsum_fingerprint(s: FlatSum, depth: int = DEFAULT_DEPTH,
                        window: int = DEFAULT_WINDOW) -> tuple:
    """Bucket a flat sum's coefficients by term fingerprint.

    The bucket map is an invariant of the underlying module element: each
    flat class lands in exactly one bucket, so equal sums give equal maps.
    Buckets whose coefficients cancel are dropped.
    """
    acc: dict[Fingerprint, int] = {}
    for _, coef, rep in s.terms:
        fp = fingerprint(rep, depth, window)
        acc[fp] = acc.get(fp, 0) + coef
    items = [(fp.data, total) for fp, total in acc.items() if total != 0]
    items.sort(key=lambda t: repr(t[0]))
    return tuple(items)


def restricted_flatsum_fingerprint(s: FlatSum, d: Diagram, i: int,
                                   depth: int = DEFAULT_DEPTH,
                                   window: int = DEFAULT_WINDOW) -> tuple:
    """Bucket map of a B-sum over component i of d, with the two kink-class
    buckets dropped; this form transfers across Reidemeister moves."""
    drop = kink_class_fingerprints(d, i, depth, window)
    return tuple(
        (data, total)
        for data, total in flatsum_fingerprint(s, depth, window)
        if data not in drop
    )


def flatsum_nonzero(s: FlatSum, depth: int = DEFAULT_DEPTH,
                    window: int = DEFAULT_WINDOW):
    """True (certified nonzero), False (certified zero), or None (unknown).

    True needs a fingerprint bucket with nonzero total, which rules out
    cancellation; False needs the reduced sum to be literally empty.
    """
    if s.is_empty():
        return False
    if flatsum_fingerprint(s, depth, window):
        return True
    return None
