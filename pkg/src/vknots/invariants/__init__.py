"""Invariant tower: writhes, polynomials, spans, B-sums, fingerprints.

The registry at the bottom names every invariant the way the command line
does and records its parameters and input arity, so batch tools can drive
the whole tower uniformly.  For B-sum valued invariants the comparable
form is the fingerprint bucket map, which is what actually transfers
across move-equivalent diagrams (raw flat sums are representation-bound).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..diagram import Diagram
from .fingerprint import (
    DEFAULT_DEPTH,
    DEFAULT_WINDOW,
    Fingerprint,
    fingerprint,
    flatsum_fingerprint,
    flatsum_nonzero,
    kink_class_fingerprints,
    restricted_flatsum_fingerprint,
)
from .flatsums import FlatSum, b_flat_sum, b_sum, flat_sum, self_crossings
from .spans import (
    FTILDE_VARS,
    LinkingNumbers,
    fspan_nk,
    linking_numbers,
    over_under_weight,
    smoothed_link_dwrithe_weight,
    span_nk,
    tilde_f,
)
from .weights import (
    WeightFn,
    i_flat,
    i_function,
    index_weight,
    nested_dwrithe,
    product,
    sign_weight,
    smoothed_dwrithe_weight,
)
from .writhes import (
    AIP_VARS,
    FNMK_VARS,
    FPOLY_VARS,
    affine_index_poly,
    dwrithe,
    dwrithe_nm,
    f_poly,
    f_poly_nmk,
    smoothed_dwrithe,
    writhe_n,
)

__all__ = [
    "AIP_VARS", "FPOLY_VARS", "FNMK_VARS", "FTILDE_VARS",
    "writhe_n", "dwrithe", "affine_index_poly", "f_poly", "dwrithe_nm",
    "f_poly_nmk", "smoothed_dwrithe",
    "WeightFn", "sign_weight", "index_weight", "product",
    "smoothed_dwrithe_weight", "i_function", "i_flat", "nested_dwrithe",
    "LinkingNumbers", "linking_numbers", "span_nk", "fspan_nk", "tilde_f",
    "over_under_weight", "smoothed_link_dwrithe_weight",
    "FlatSum", "flat_sum", "b_sum", "b_flat_sum", "self_crossings",
    "Fingerprint", "fingerprint", "flatsum_fingerprint", "flatsum_nonzero",
    "kink_class_fingerprints", "restricted_flatsum_fingerprint",
    "DEFAULT_WINDOW", "DEFAULT_DEPTH",
    "InvariantSpec", "REGISTRY", "compute_invariant", "comparable_invariant",
]


@dataclass(frozen=True)
class InvariantSpec:
    name: str
    params: tuple[str, ...]
    arity: str  # "knot" | "link2" | "any"
    compute: Callable


REGISTRY: dict[str, InvariantSpec] = {
    "jn": InvariantSpec("jn", ("n",), "knot", lambda d, n: writhe_n(d, n)),
    "djn": InvariantSpec("djn", ("n",), "knot", lambda d, n: dwrithe(d, n)),
    "aip": InvariantSpec("aip", (), "knot", affine_index_poly),
    "fpoly": InvariantSpec("fpoly", ("n",), "knot", lambda d, n: f_poly(d, n)),
    "djnm": InvariantSpec("djnm", ("n", "m"), "knot",
                          lambda d, n, m: dwrithe_nm(d, n, m)),
    "fnmk": InvariantSpec("fnmk", ("n", "m", "k"), "knot",
                          lambda d, n, m, k: f_poly_nmk(d, n, m, k)),
    "lk": InvariantSpec("lk", (), "link2", linking_numbers),
    "span": InvariantSpec("span", (), "link2", lambda d: linking_numbers(d).span),
    "spannk": InvariantSpec("spannk", ("n", "k"), "link2",
                            lambda d, n, k: span_nk(d, n, k)),
    "fspannk": InvariantSpec("fspannk", ("n", "k"), "link2",
                             lambda d, n, k: fspan_nk(d, n, k)),
    "ftilde": InvariantSpec("ftilde", ("n", "k", "m"), "knot",
                            lambda d, n, k, m: tilde_f(d, n, k, m)),
    "bsum": InvariantSpec("bsum", ("i",), "any", lambda d, i: b_sum(d, i)),
    "bflat": InvariantSpec("bflat", ("i",), "any", lambda d, i: b_flat_sum(d, i)),
}


def _check_arity(spec: InvariantSpec, d: Diagram) -> None:
    from ..errors import PreconditionError

    if spec.arity == "knot" and d.n_components != 1:
        raise PreconditionError(
            f"invariant {spec.name!r} needs a knot diagram "
            f"(got {d.n_components} components)"
        )
    if spec.arity == "link2" and d.n_components != 2:
        raise PreconditionError(
            f"invariant {spec.name!r} needs a 2-component link "
            f"(got {d.n_components} components)"
        )


def compute_invariant(name: str, d: Diagram, params: dict):
    """Evaluate a registry invariant; returns int, LaurentPoly,
    LinkingNumbers, or FlatSum."""
    from ..errors import PreconditionError

    if name not in REGISTRY:
        raise PreconditionError(f"unknown invariant {name!r}")
    spec = REGISTRY[name]
    _check_arity(spec, d)
    missing = [p for p in spec.params if params.get(p) is None]
    if missing:
        raise PreconditionError(
            f"invariant {name!r} needs parameter(s) {', '.join(missing)}"
        )
    args = [params[p] for p in spec.params]
    return spec.compute(d, *args)


def comparable_invariant(name: str, d: Diagram, params: dict,
                         depth: int = DEFAULT_DEPTH,
                         window: int = DEFAULT_WINDOW):
    """Move-transferable form of an invariant's value, for equality checks.

    B-sum values are compared through their kink-restricted fingerprint
    bucket maps; the raw formal sums are representation-bound (a kink move
    shifts them by a diagram-with-unknot class).
    """
    value = compute_invariant(name, d, params)
    if isinstance(value, FlatSum):
        return restricted_flatsum_fingerprint(value, d, params["i"], depth, window)
    return value
