"""Formal integer sums of flat link classes.

A FlatSum is an element of the free module on flat diagram classes, held
as canonical-key -> coefficient with a stored representative diagram per
key.  Keys merge exactly when the canonical flat keys coincide; proving
that two distinct keys are (or are not) the same flat class is out of
scope here and delegated to fingerprints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..diagram import Diagram, FlatKey, crossing_change, flat_key
from ..errors import PreconditionError
from ..smoothing import smooth2

__all__ = ["FlatSum", "flat_sum", "b_sum", "b_flat_sum", "self_crossings"]


@dataclass(frozen=True)
class FlatSum:
    """Reduced formal sum; terms ordered by key text, zero terms dropped."""

    terms: tuple[tuple[FlatKey, int, Diagram], ...]

    def is_empty(self) -> bool:
        return not self.terms

    def coefficients(self) -> dict[FlatKey, int]:
        return {key: coef for key, coef, _ in self.terms}

    def __add__(self, other: "FlatSum") -> "FlatSum":
        pairs = [(rep, coef) for _, coef, rep in self.terms]
        pairs += [(rep, coef) for _, coef, rep in other.terms]
        return flat_sum(pairs)

    def __neg__(self) -> "FlatSum":
        return FlatSum(tuple((k, -c, r) for k, c, r in self.terms))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (_, coef, rep) in enumerate(self.terms):
            mag = abs(coef)
            body = f"[{rep}]" if mag == 1 else f"{mag}[{rep}]"
            if i == 0:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def flat_sum(pairs: Iterable[tuple[Diagram, int]]) -> FlatSum:
    """Reduce (diagram, coefficient) pairs by canonical flat key."""
    acc: dict[FlatKey, tuple[int, Diagram]] = {}
    for rep, coef in pairs:
        key = flat_key(rep)
        if key in acc:
            acc[key] = (acc[key][0] + coef, acc[key][1])
        else:
            acc[key] = (coef, rep)
    cleaned = [(k, c, r) for k, (c, r) in acc.items() if c != 0]
    cleaned.sort(key=lambda t: t[0].canonical_text)
    return FlatSum(tuple(cleaned))


def self_crossings(d: Diagram, i: int) -> tuple[int, ...]:
    """Crossings with both passages on component i (1-based)."""
    if not 1 <= i <= d.n_components:
        raise PreconditionError(f"component index {i} out of range 1..{d.n_components}")
    return tuple(
        c for c in d.crossing_ids()
        if d.components_of(c) == (i - 1, i - 1)
    )


def b_sum(d: Diagram, i: int) -> FlatSum:
    """Signed sum of flat classes of type-2 smoothings at the self-crossings
    of component i; a virtual link invariant."""
    return flat_sum((smooth2(d, c), d.sign(c)) for c in self_crossings(d, i))


def b_flat_sum(d: Diagram, i: int) -> FlatSum:
    """Crossing-change invariant version: each smoothing is paired against
    the smoothing taken after changing that crossing."""
    pairs = []
    for c in self_crossings(d, i):
        s = d.sign(c)
        pairs.append((smooth2(d, c), s))
        pairs.append((smooth2(crossing_change(d, c), c), -s))
    return flat_sum(pairs)
