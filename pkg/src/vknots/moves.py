"""Classical Reidemeister rewrites on Gauss diagrams.

Site detection works directly on the cyclic passage sequences: "adjacent"
means no other classical passage between, which is the right notion here
because virtual crossings are not represented and any two arcs can be
brought together through them.  Insertions at arbitrary arc pairs are
therefore legitimate moves of the virtual theory even when no classical
bigon is present.

R3 sites are triangles of three strand-runs with a consistent over/under
hierarchy whose order/sign data matches a frozen table of the sixteen
locally realizable configurations (generated by sweeping all triangles of
three directed lines in the plane).  Applying any move yields a valid
diagram; deletes shrink the crossing count by the move's arity and R3
swaps the three adjacent passage pairs in place.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .diagram import OVER, UNDER, Diagram, Passage
from .errors import PreconditionError, StaleMoveError

__all__ = ["MoveSite", "enumerate_moves", "apply_move", "random_walk", "KINDS"]

KINDS = ("R1-delete", "R2-delete", "R3", "R1-insert", "R2-insert")

# Realizable (bitT, bitM, bitB, sTM, sTB, sMB) triangle configurations, where
# bitX records whether run X meets its crossing with the next-lower run before
# the other one.  Exactly the sign patterns reachable by three directed lines;
# closed under flipping all three bits (the move itself).
_R3_PATTERNS = frozenset([
    (False, False, False, -1, -1, -1),
    (False, False, False, 1, 1, 1),
    (False, False, True, -1, 1, 1),
    (False, False, True, 1, -1, -1),
    (False, True, False, -1, 1, -1),
    (False, True, False, 1, -1, 1),
    (False, True, True, -1, -1, 1),
    (False, True, True, 1, 1, -1),
    (True, False, False, -1, -1, 1),
    (True, False, False, 1, 1, -1),
    (True, False, True, -1, 1, -1),
    (True, False, True, 1, -1, 1),
    (True, True, False, -1, 1, 1),
    (True, True, False, 1, -1, -1),
    (True, True, True, -1, -1, -1),
    (True, True, True, 1, 1, 1),
])


@dataclass(frozen=True)
class MoveSite:
    """One applicable rewrite.

    location/variant layout by kind:

    * ``R1-delete``: location ``(comp, pos)`` — the first of the chord's two
      cyclically adjacent passages.
    * ``R1-insert``: location ``(comp, gap)``; variant ``(sign, first_strand)``.
    * ``R2-delete``: location ``(comp_o, pos_o, comp_u, pos_u)`` — start of the
      over pair and of the under pair.
    * ``R2-insert``: location ``(comp_o, gap_o, comp_u, gap_u)``; variant
      ``(sign, "par" | "anti")``.
    * ``R3``: location ``((comp, pos), (comp, pos), (comp, pos))`` — the three
      runs, each covering positions pos and pos+1.
    """

    kind: str
    location: tuple
    variant: tuple = field(default=())

    @property
    def crossing_delta(self) -> int:
        return {"R1-insert": 1, "R2-insert": 2, "R1-delete": -1,
                "R2-delete": -2, "R3": 0}[self.kind]


def _adjacent_pairs(d: Diagram):
    """(comp, pos, passage, next_passage) for every cyclically adjacent pair."""
    for ci, comp in enumerate(d.components):
        n = len(comp)
        if n < 2:
            continue
        for pos in range(n):
            yield ci, pos, comp[pos], comp[(pos + 1) % n]


def _r1_delete_sites(d: Diagram):
    seen = set()
    for ci, pos, p, q in _adjacent_pairs(d):
        if p.crossing == q.crossing and p.crossing not in seen:
            seen.add(p.crossing)
            yield MoveSite("R1-delete", (ci, pos))


def _r2_delete_sites(d: Diagram):
    overs, unders = [], []
    for ci, pos, p, q in _adjacent_pairs(d):
        if p.crossing == q.crossing:
            continue
        key = frozenset((p.crossing, q.crossing))
        if p.over and q.over:
            overs.append((key, ci, pos, p, q))
        elif not p.over and not q.over:
            unders.append((key, ci, pos))
    for key, ci, pos, p, q in overs:
        if p.sign != -q.sign:
            continue
        for ukey, cj, qos in unders:
            if ukey == key:
                yield MoveSite("R2-delete", (ci, pos, cj, qos))


def _runs_hierarchy(runs):
    """Given three runs [(chords, flags, pos_data)], compute (T, M, B) order
    or None if the over/under relations are cyclic."""
    # beats[i][j]: run i is over at its crossing with run j
    beats = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            common = runs[i]["chords"] & runs[j]["chords"]
            if len(common) != 1:
                return None
            c = next(iter(common))
            beats[(i, j)] = runs[i]["flag"][c] == OVER
    score = [sum(beats[(i, j)] for j in range(3) if j != i) for i in range(3)]
    if sorted(score) != [0, 1, 2]:
        return None
    t = score.index(2)
    m = score.index(1)
    b = score.index(0)
    return t, m, b


def _r3_sites(d: Diagram):
    runs = []
    for ci, pos, p, q in _adjacent_pairs(d):
        if p.crossing != q.crossing:
            runs.append({
                "loc": (ci, pos),
                "span": frozenset(((ci, pos), (ci, (pos + 1) % len(d.components[ci])))),
                "chords": frozenset((p.crossing, q.crossing)),
                "flag": {p.crossing: p.strand, q.crossing: q.strand},
                "order": (p.crossing, q.crossing),
            })
    seen = set()
    n = len(runs)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                trio = (runs[i], runs[j], runs[k])
                chords = trio[0]["chords"] | trio[1]["chords"] | trio[2]["chords"]
                if len(chords) != 3:
                    continue
                if len(trio[0]["span"] | trio[1]["span"] | trio[2]["span"]) != 6:
                    continue
                if _r3_pattern(d, trio) is None:
                    continue
                loc = tuple(sorted(r["loc"] for r in trio))
                if loc not in seen:
                    seen.add(loc)
                    yield MoveSite("R3", loc)


def _r3_pattern(d: Diagram, trio):
    """Pattern tuple of a run triple if it is a legal R3 site, else None."""
    hier = _runs_hierarchy(list(trio))
    if hier is None:
        return None
    t, m, b = hier
    rt, rm, rb = trio[t], trio[m], trio[b]
    c_tm = next(iter(rt["chords"] & rm["chords"]))
    c_tb = next(iter(rt["chords"] & rb["chords"]))
    c_mb = next(iter(rm["chords"] & rb["chords"]))
    pattern = (
        rt["order"][0] == c_tm,
        rm["order"][0] == c_tm,
        rb["order"][0] == c_tb,
        d.sign(c_tm),
        d.sign(c_tb),
        d.sign(c_mb),
    )
    return pattern if pattern in _R3_PATTERNS else None


def _insert_sites(d: Diagram, kind: str):
    gaps = [(ci, g) for ci, comp in enumerate(d.components)
            for g in range(max(len(comp), 1))]
    if kind == "R1-insert":
        for ci, g in gaps:
            for sign in (1, -1):
                for first in (OVER, UNDER):
                    yield MoveSite("R1-insert", (ci, g), (sign, first))
    else:
        for ci, g1 in gaps:
            for cj, g2 in gaps:
                for sign in (1, -1):
                    for order in ("par", "anti"):
                        yield MoveSite("R2-insert", (ci, g1, cj, g2), (sign, order))


def enumerate_moves(d: Diagram, kinds=KINDS) -> list[MoveSite]:
    """All applicable delete/R3 sites and the spanning set of insert sites."""
    out: list[MoveSite] = []
    for kind in KINDS:
        if kind not in kinds:
            continue
        if kind == "R1-delete":
            out.extend(_r1_delete_sites(d))
        elif kind == "R2-delete":
            out.extend(_r2_delete_sites(d))
        elif kind == "R3":
            out.extend(_r3_sites(d))
        else:
            out.extend(_insert_sites(d, kind))
    return out


# -- application --------------------------------------------------------


def _fresh_ids(d: Diagram, n: int) -> list[int]:
    top = max(d.crossing_ids(), default=0)
    return [top + 1 + k for k in range(n)]


def _remove_positions(comp, positions):
    return tuple(p for i, p in enumerate(comp) if i not in positions)


def apply_move(d: Diagram, m: MoveSite) -> Diagram:
    """Apply a site obtained from ``enumerate_moves`` on the same diagram."""
    comps = list(d.components)
    if m.kind == "R1-delete":
        ci, pos = m.location
        comp = comps[ci]
        n = len(comp)
        if n < 2 or comp[pos].crossing != comp[(pos + 1) % n].crossing:
            raise StaleMoveError(f"no R1 pair at {m.location}")
        comps[ci] = _remove_positions(comp, {pos, (pos + 1) % n})
        return Diagram(tuple(comps))

    if m.kind == "R2-delete":
        ci, pos, cj, qos = m.location
        co, cu = comps[ci], comps[cj]
        po, qo = co[pos], co[(pos + 1) % len(co)]
        pu, qu = cu[qos], cu[(qos + 1) % len(cu)]
        ok = (
            po.over and qo.over and not pu.over and not qu.over
            and {po.crossing, qo.crossing} == {pu.crossing, qu.crossing}
            and len({po.crossing, qo.crossing}) == 2
            and po.sign == -qo.sign
        )
        if not ok:
            raise StaleMoveError(f"no R2 pair at {m.location}")
        if ci == cj:
            comps[ci] = _remove_positions(
                co, {pos, (pos + 1) % len(co), qos, (qos + 1) % len(co)}
            )
        else:
            comps[ci] = _remove_positions(co, {pos, (pos + 1) % len(co)})
            comps[cj] = _remove_positions(cu, {qos, (qos + 1) % len(cu)})
        return Diagram(tuple(comps))

    if m.kind == "R3":
        trio = []
        for ci, pos in m.location:
            comp = comps[ci]
            p, q = comp[pos], comp[(pos + 1) % len(comp)]
            if p.crossing == q.crossing:
                raise StaleMoveError(f"no R3 run at {(ci, pos)}")
            trio.append({
                "loc": (ci, pos),
                "span": frozenset(((ci, pos), (ci, (pos + 1) % len(comp)))),
                "chords": frozenset((p.crossing, q.crossing)),
                "flag": {p.crossing: p.strand, q.crossing: q.strand},
                "order": (p.crossing, q.crossing),
            })
        if _r3_pattern(d, tuple(trio)) is None:
            raise StaleMoveError(f"no legal R3 triangle at {m.location}")
        for ci, pos in m.location:
            comp = list(comps[ci])
            nxt = (pos + 1) % len(comp)
            comp[pos], comp[nxt] = comp[nxt], comp[pos]
            comps[ci] = tuple(comp)
        return Diagram(tuple(comps))

    if m.kind == "R1-insert":
        ci, gap = m.location
        sign, first = m.variant
        (cid,) = _fresh_ids(d, 1)
        second = UNDER if first == OVER else OVER
        pair = (Passage(cid, first, sign), Passage(cid, second, sign))
        comp = comps[ci]
        if gap > len(comp):
            raise StaleMoveError(f"gap {gap} out of range")
        comps[ci] = comp[:gap] + pair + comp[gap:]
        return Diagram(tuple(comps))

    if m.kind == "R2-insert":
        ci, g1, cj, g2 = m.location
        sign, order = m.variant
        c, e = _fresh_ids(d, 2)
        over_pair = (Passage(c, OVER, sign), Passage(e, OVER, -sign))
        if order == "par":
            under_pair = (Passage(c, UNDER, sign), Passage(e, UNDER, -sign))
        else:
            under_pair = (Passage(e, UNDER, -sign), Passage(c, UNDER, sign))
        if g1 > len(comps[ci]) or g2 > len(comps[cj]):
            raise StaleMoveError("gap out of range")
        if ci == cj:
            comp = comps[ci]
            if g1 == g2:
                comps[ci] = comp[:g1] + over_pair + under_pair + comp[g1:]
            elif g1 < g2:
                comps[ci] = comp[:g1] + over_pair + comp[g1:g2] + under_pair + comp[g2:]
            else:
                comps[ci] = comp[:g2] + under_pair + comp[g2:g1] + over_pair + comp[g1:]
        else:
            comps[ci] = comps[ci][:g1] + over_pair + comps[ci][g1:]
            comps[cj] = comps[cj][:g2] + under_pair + comps[cj][g2:]
        return Diagram(tuple(comps))

    raise PreconditionError(f"unknown move kind {m.kind!r}")


def random_walk(d: Diagram, steps: int, seed: int, max_crossings: int = 12) -> Diagram:
    """Deterministic random move sequence; stalls early if nothing fits."""
    if steps < 0:
        raise PreconditionError("steps must be >= 0")
    rng = random.Random(seed)
    cur = d
    for _ in range(steps):
        budget = max_crossings - cur.n_crossings
        sites = [m for m in enumerate_moves(cur) if m.crossing_delta <= budget]
        if not sites:
            break
        cur = apply_move(cur, sites[rng.randrange(len(sites))])
    return cur
