"""Multi-component signed Gauss codes for ordered oriented virtual links.

A diagram is an ordered list of components; each component is a cyclic
sequence of crossing passages.  A passage records which crossing is met,
whether the strand goes over or under, and the crossing sign.  Virtual
crossings are never stored: a virtual link is its Gauss code, which makes
the virtual Reidemeister moves and the semi-virtual move act trivially.

Text grammar (whitespace ignored)::

    link      :=  component (";" component)*
    component :=  "0"  |  passage+
    passage   :=  ("O" | "U") uint ("+" | "-")

``"0"`` denotes a crossing-free unknot component.  Example:
``"O1+U2+O3-U1+O2+U3-"``.

All values here are immutable; every operation returns a new Diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import GaussCodeError, PreconditionError, ValidationError

__all__ = [
    "Passage",
    "Diagram",
    "FlatKey",
    "parse",
    "serialize",
    "mirror",
    "crossing_change",
    "reverse_component",
    "reorder_components",
    "flat_key",
]

OVER = "O"
UNDER = "U"


@dataclass(frozen=True, order=True)
class Passage:
    """One visit of a strand to a classical crossing."""

    crossing: int
    strand: str  # OVER or UNDER
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.strand not in (OVER, UNDER):
            raise ValidationError(f"bad strand flag {self.strand!r}")
        if self.sign not in (1, -1):
            raise ValidationError(f"bad sign {self.sign!r}")
        if self.crossing < 1:
            raise ValidationError(f"crossing id must be positive, got {self.crossing}")

    @property
    def over(self) -> bool:
        return self.strand == OVER

    def token(self) -> str:
        return f"{self.strand}{self.crossing}{'+' if self.sign > 0 else '-'}"

    def _sort_key(self):
        # Token order: strand O < U, then id, then sign + < -.
        return (0 if self.strand == OVER else 1, self.crossing, 0 if self.sign > 0 else 1)


Component = tuple  # tuple[Passage, ...]


@dataclass(frozen=True)
class Diagram:
    """An ordered oriented virtual link as a signed multi-component Gauss code."""

    components: tuple[Component, ...]

    def __post_init__(self):
        _validate(self.components)

    # -- basic queries -------------------------------------------------

    @property
    def n_components(self) -> int:
        return len(self.components)

    def crossing_ids(self) -> tuple[int, ...]:
        seen = []
        for comp in self.components:
            for p in comp:
                if p.crossing not in seen:
                    seen.append(p.crossing)
        return tuple(sorted(seen))

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def sign(self, crossing: int) -> int:
        for comp in self.components:
            for p in comp:
                if p.crossing == crossing:
                    return p.sign
        raise PreconditionError(f"unknown crossing id {crossing}")

    def passage_positions(self, crossing: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Positions ``(component, index)`` of the over and under passage."""
        over = under = None
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                if p.crossing == crossing:
                    if p.over:
                        over = (ci, pi)
                    else:
                        under = (ci, pi)
        if over is None or under is None:
            raise PreconditionError(f"unknown crossing id {crossing}")
        return over, under

    def components_of(self, crossing: int) -> tuple[int, int]:
        """0-based components of the over and under passage of a crossing."""
        (oc, _), (uc, _) = self.passage_positions(crossing)
        return oc, uc

    def is_self_crossing(self, crossing: int) -> bool:
        oc, uc = self.components_of(crossing)
        return oc == uc

    def __str__(self) -> str:
        return serialize(self)


def _validate(components: Iterable[Component]) -> None:
    seen: dict[int, list[Passage]] = {}
    for comp in components:
        for p in comp:
            seen.setdefault(p.crossing, []).append(p)
    for cid, passages in seen.items():
        if len(passages) != 2:
            raise ValidationError(
                f"crossing {cid} occurs {len(passages)} time(s), expected 2"
            )
        a, b = passages
        if {a.strand, b.strand} != {OVER, UNDER}:
            raise ValidationError(f"crossing {cid} is not once over and once under")
        if a.sign != b.sign:
            raise ValidationError(f"crossing {cid} has mismatched signs")


def diagram(components: Iterable[Iterable[Passage]]) -> Diagram:
    """Build a validated Diagram from nested iterables."""
    return Diagram(tuple(tuple(c) for c in components))


# -- parsing and serialization ----------------------------------------

_PASSAGE_RE = re.compile(r"([OU])(\d+)([+-])")


def parse(text: str) -> Diagram:
    """Parse Gauss-code text into a validated Diagram."""
    stripped = "".join(text.split())
    if not stripped:
        raise GaussCodeError("empty input")
    components = []
    offset = 0
    for chunk in stripped.split(";"):
        if chunk == "0":
            components.append(())
            offset += len(chunk) + 1
            continue
        if not chunk:
            raise GaussCodeError("empty component", position=offset)
        passages = []
        pos = 0
        while pos < len(chunk):
            m = _PASSAGE_RE.match(chunk, pos)
            if m is None:
                raise GaussCodeError(
                    f"expected passage, found {chunk[pos:pos + 4]!r}",
                    position=offset + pos,
                )
            strand, cid, sign = m.groups()
            passages.append(Passage(int(cid), strand, 1 if sign == "+" else -1))
            pos = m.end()
        components.append(tuple(passages))
        offset += len(chunk) + 1
    return Diagram(tuple(components))


def _min_rotation(comp: Component) -> Component:
    if len(comp) <= 1:
        return comp
    keys = [p._sort_key() for p in comp]
    n = len(comp)
    best = min(range(n), key=lambda r: [keys[(r + i) % n] for i in range(n)])
    return comp[best:] + comp[:best]


def serialize(d: Diagram) -> str:
    """Canonical text: each component rotated to its least token sequence."""
    parts = []
    for comp in d.components:
        if not comp:
            parts.append("0")
        else:
            parts.append("".join(p.token() for p in _min_rotation(comp)))
    return ";".join(parts)


# -- symmetries --------------------------------------------------------


def _flip(p: Passage) -> Passage:
    return Passage(p.crossing, UNDER if p.over else OVER, -p.sign)


def mirror(d: Diagram) -> Diagram:
    """Change every classical crossing: over/under swapped, signs negated."""
    return Diagram(tuple(tuple(_flip(p) for p in comp) for comp in d.components))


def crossing_change(d: Diagram, crossing: int) -> Diagram:
    """Change a single classical crossing."""
    d.sign(crossing)  # raises on unknown id
    return Diagram(
        tuple(
            tuple(_flip(p) if p.crossing == crossing else p for p in comp)
            for comp in d.components
        )
    )


def reverse_component(d: Diagram, i: int) -> Diagram:
    """Reverse orientation of component ``i`` (1-based).

    A crossing sign flips iff exactly one of its two passages lies on the
    reversed component.
    """
    if not 1 <= i <= d.n_components:
        raise PreconditionError(f"component index {i} out of range 1..{d.n_components}")
    target = i - 1
    flips = set()
    for cid in d.crossing_ids():
        oc, uc = d.components_of(cid)
        if (oc == target) != (uc == target):
            flips.add(cid)
    new_components = []
    for ci, comp in enumerate(d.components):
        seq = tuple(reversed(comp)) if ci == target else comp
        new_components.append(
            tuple(
                Passage(p.crossing, p.strand, -p.sign if p.crossing in flips else p.sign)
                for p in seq
            )
        )
    return Diagram(tuple(new_components))


def reorder_components(d: Diagram, perm: Iterable[int]) -> Diagram:
    """Permute components; ``perm[k]`` is the 1-based old index placed at slot k."""
    perm = tuple(perm)
    n = d.n_components
    if sorted(perm) != list(range(1, n + 1)):
        raise PreconditionError(f"{perm} is not a permutation of 1..{n}")
    return Diagram(tuple(d.components[j - 1] for j in perm))


# -- flat canonical keys ----------------------------------------------


@dataclass(frozen=True)
class FlatKey:
    """Canonical key of the flat diagram underlying a Diagram.

    Equal for diagrams related by crossing changes, per-component rotation,
    and crossing relabeling.  Component order and orientations are part of
    the key.  Not a complete flat invariant: Reidemeister-equivalent flat
    diagrams may still get different keys.
    """

    canonical_text: str


def _flat_text(components: tuple[Component, ...], rotations: tuple[int, ...]) -> str:
    # A crossing change flips the over/under arrow and the sign together, so
    # the pair (first passage is the over one, sign) is well defined up to a
    # simultaneous flip; anchoring the arrow at the first-encountered passage
    # makes the per-chord datum crossing-change invariant.
    relabel: dict[int, int] = {}
    flat_sign: dict[int, int] = {}
    out = []
    for comp, rot in zip(components, rotations):
        toks = []
        n = len(comp)
        for k in range(n):
            p = comp[(rot + k) % n]
            if p.crossing not in relabel:
                relabel[p.crossing] = len(relabel) + 1
                flat_sign[p.crossing] = p.sign if p.over else -p.sign
                toks.append(f"{relabel[p.crossing]}{'+' if flat_sign[p.crossing] > 0 else '-'}")
            else:
                toks.append(f"{relabel[p.crossing]}'")
        out.append(".".join(toks) if toks else "0")
    return ";".join(out)


def flat_key(d: Diagram) -> FlatKey:
    """Deterministic key of the underlying flat diagram class."""
    sizes = [max(len(c), 1) for c in d.components]

    def rec(idx: int, rotations: tuple[int, ...], best: list[str | None]):
        if idx == len(sizes):
            text = _flat_text(d.components, rotations)
            if best[0] is None or text < best[0]:
                best[0] = text
            return
        for r in range(sizes[idx]):
            rec(idx + 1, rotations + (r,), best)

    best: list[str | None] = [None]
    rec(0, (), best)
    assert best[0] is not None
    return FlatKey(best[0])
