"""Writhe-type invariants of virtual knot diagrams.

The n-th writhe counts crossings of index n with sign; its difference
with the (-n)-th writhe is insensitive to crossing changes, which makes it
an invariant of the underlying flat knot.  Refinements below attach
difference writhes of type-1 smoothed diagrams to each crossing, giving
the two- and three-variable polynomial families.
"""

from __future__ import annotations

from functools import lru_cache

from ..diagram import Diagram
from ..errors import PreconditionError
from ..labeling import index_map
from ..laurent import LaurentPoly, monomial, zero
from ..smoothing import smooth1

__all__ = [
    "writhe_n",
    "dwrithe",
    "affine_index_poly",
    "smoothed_dwrithe",
    "f_poly",
    "dwrithe_nm",
    "f_poly_nmk",
    "AIP_VARS",
    "FPOLY_VARS",
    "FNMK_VARS",
]

AIP_VARS = ("t",)
FPOLY_VARS = ("t", "l")
FNMK_VARS = ("t", "l1", "l2")


def _require_knot(d: Diagram, what: str) -> None:
    if d.n_components != 1:
        raise PreconditionError(
            f"{what} is defined for knot diagrams only (got {d.n_components} components)"
        )


def writhe_n(d: Diagram, n: int) -> int:
    """n-th writhe: signed count of crossings with index n (n != 0)."""
    _require_knot(d, "the n-th writhe")
    if n == 0:
        raise PreconditionError("the n-th writhe requires n != 0")
    inds = index_map(d)
    return sum(d.sign(c) for c, i in inds.items() if i == n)


@lru_cache(maxsize=65536)
def dwrithe(d: Diagram, n: int) -> int:
    """n-th difference writhe (n > 0); crossing-change invariant."""
    _require_knot(d, "the difference writhe")
    if n <= 0:
        raise PreconditionError("the difference writhe requires n > 0")
    return writhe_n(d, n) - writhe_n(d, -n)


def affine_index_poly(d: Diagram) -> LaurentPoly:
    """Sum of sign(c) * (t^index(c) - 1) over classical crossings."""
    _require_knot(d, "the affine index polynomial")
    p = zero(AIP_VARS)
    for c, ind in index_map(d).items():
        s = d.sign(c)
        p = p + monomial(s, (ind,), AIP_VARS) + monomial(-s, (0,), AIP_VARS)
    return p


def smoothed_dwrithe(d: Diagram, crossing: int, n: int) -> int:
    """Difference writhe of the type-1 smoothing at one crossing."""
    return dwrithe(smooth1(d, crossing), n)


def f_poly(d: Diagram, n: int) -> LaurentPoly:
    """Two-variable refinement of the affine index polynomial.

    Crossings whose smoothed difference writhe equals the diagram's own (up
    to sign) contribute ``sign*(t^ind - 1)*l^value``; the others contribute
    ``sign*(t^ind*l^value - l^base)``.
    """
    _require_knot(d, "the F-polynomial")
    if n <= 0:
        raise PreconditionError("the F-polynomial requires n > 0")
    base = dwrithe(d, n)
    inds = index_map(d)
    p = zero(FPOLY_VARS)
    for c, ind in inds.items():
        s = d.sign(c)
        sd = smoothed_dwrithe(d, c, n)
        p = p + monomial(s, (ind, sd), FPOLY_VARS)
        if sd in (base, -base):
            p = p + monomial(-s, (0, sd), FPOLY_VARS)
        else:
            p = p + monomial(-s, (0, base), FPOLY_VARS)
    return p


def dwrithe_nm(d: Diagram, n: int, m: int) -> int:
    """(n,m)-difference writhe:
    ``m * sum of sign(c) * smoothed_dwrithe(c, n) over crossings of index
    m or -m``.  Crossing-change invariant, and odd in m.

    Both level sets must enter: changing a crossing of index -m moves it to
    the index-m set while negating both its sign and its smoothed value, so
    the symmetric sum is what survives crossing changes (and is what the
    flat I-function machinery produces).
    """
    _require_knot(d, "the (n,m)-difference writhe")
    if n <= 0:
        raise PreconditionError("the (n,m)-difference writhe requires n > 0")
    if m == 0:
        return 0
    inds = index_map(d)
    return m * sum(
        d.sign(c) * smoothed_dwrithe(d, c, n)
        for c, i in inds.items()
        if i in (m, -m)
    )


def f_poly_nmk(d: Diagram, n: int, m: int, k: int) -> LaurentPoly:
    """Three-variable polynomial driven by both smoothed difference writhes.

    A crossing sits in the exceptional set T when both its smoothed values
    match the diagram's own up to sign.
    """
    _require_knot(d, "the generalized F-polynomial")
    base1 = dwrithe(d, n)
    base2 = dwrithe_nm(d, m, k)
    inds = index_map(d)
    p = zero(FNMK_VARS)
    for c, ind in inds.items():
        s = d.sign(c)
        dc = smooth1(d, c)
        e1 = dwrithe(dc, n)
        e2 = dwrithe_nm(dc, m, k)
        p = p + monomial(s, (ind, e1, e2), FNMK_VARS)
        if e1 in (base1, -base1) and e2 in (base2, -base2):
            p = p + monomial(-s, (0, e1, e2), FNMK_VARS)
        else:
            p = p + monomial(-s, (0, base1, base2), FNMK_VARS)
    return p
