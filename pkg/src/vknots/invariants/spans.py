"""Linking numbers, spans, and the three-variable span polynomial.

For an ordered two-component link the crossings where the first component
passes over the second and where it passes under contribute separate
linking numbers; their difference (the span) survives all moves, and the
refinement by difference writhes of type-3 smoothings survives crossing
changes once symmetrized.  Attaching those flat spans of type-2 smoothings
to the crossings of a knot gives the three-variable polynomial family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..diagram import Diagram
from ..errors import PreconditionError
from ..labeling import index_map
from ..laurent import LaurentPoly, monomial, zero
from ..smoothing import smooth1, smooth2, smooth3
from .weights import WeightFn
from .writhes import dwrithe

__all__ = [
    "LinkingNumbers",
    "linking_numbers",
    "span_nk",
    "fspan_nk",
    "tilde_f",
    "over_under_weight",
    "smoothed_link_dwrithe_weight",
    "FTILDE_VARS",
]

FTILDE_VARS = ("t", "l", "v")


@dataclass(frozen=True)
class LinkingNumbers:
    over: int
    under: int

    @property
    def span(self) -> int:
        return self.over - self.under


def _require_two_components(d: Diagram, what: str) -> None:
    if d.n_components != 2:
        raise PreconditionError(
            f"{what} needs exactly 2 components (got {d.n_components})"
        )


def _inter_crossings(d: Diagram):
    """(crossing, first_component_is_over) for crossings joining the two
    components of a 2-component diagram."""
    for c in d.crossing_ids():
        oc, uc = d.components_of(c)
        if oc != uc:
            yield c, oc == 0


def linking_numbers(d: Diagram) -> LinkingNumbers:
    """Over- and under-linking numbers of an ordered 2-component link."""
    _require_two_components(d, "linking numbers")
    over = under = 0
    for c, first_over in _inter_crossings(d):
        if first_over:
            over += d.sign(c)
        else:
            under += d.sign(c)
    return LinkingNumbers(over, under)


@lru_cache(maxsize=65536)
def span_nk(d: Diagram, n: int, k: int) -> int:
    """Signed over-minus-under count over crossings whose type-3 smoothing
    has n-th difference writhe k."""
    _require_two_components(d, "the (n,k)-span")
    if n <= 0:
        raise PreconditionError("the (n,k)-span requires n > 0")
    total = 0
    for c, first_over in _inter_crossings(d):
        if dwrithe(smooth3(d, c), n) == k:
            total += d.sign(c) if first_over else -d.sign(c)
    return total


def fspan_nk(d: Diagram, n: int, k: int) -> int:
    """Flat span: symmetrized in k, hence crossing-change invariant."""
    return span_nk(d, n, k) + span_nk(d, n, -k)


# Weight-function formulation of the same sums, for the generic path.

def over_under_weight() -> WeightFn:
    """Odd weight: +sign on first-over crossings, -sign on first-under."""

    def ev(d: Diagram, c: int) -> int:
        oc, uc = d.components_of(c)
        return d.sign(c) if oc == 0 else -d.sign(c)

    return WeightFn(
        "oulk", "odd", ev,
        lambda d, c: d.n_components == 2 and not d.is_self_crossing(c),
    )


def smoothed_link_dwrithe_weight(n: int) -> WeightFn:
    """Even weight: n-th difference writhe of the type-3 smoothing."""
    return WeightFn(
        f"dj{n}@smooth3",
        "even",
        lambda d, c: dwrithe(smooth3(d, c), n),
        lambda d, c: d.n_components == 2 and not d.is_self_crossing(c),
    )


def tilde_f(d: Diagram, n: int, k: int, m: int) -> LaurentPoly:
    """Three-variable polynomial mixing smoothed difference writhes with
    flat spans of type-2 smoothings.

    The exceptional set T holds crossings whose smoothed difference writhe
    matches the diagram's own up to sign and whose type-2 smoothing has
    vanishing (k,m) flat span.  Every crossing's v-exponent uses its own
    type-2 smoothing, including crossings outside T.
    """
    if d.n_components != 1:
        raise PreconditionError(
            "the span polynomial is defined for knot diagrams only "
            f"(got {d.n_components} components)"
        )
    base = dwrithe(d, n)
    inds = index_map(d)
    p = zero(FTILDE_VARS)
    for c, ind in inds.items():
        s = d.sign(c)
        e1 = dwrithe(smooth1(d, c), n)
        fs = fspan_nk(smooth2(d, c), k, m)
        p = p + monomial(s, (ind, e1, fs), FTILDE_VARS)
        if e1 in (base, -base) and fs == 0:
            p = p + monomial(-s, (0, e1, fs), FTILDE_VARS)
        else:
            p = p + monomial(-s, (0, base, fs), FTILDE_VARS)
    return p
