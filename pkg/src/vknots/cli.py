"""Command line front end.

Subcommands: parse, invariant, smooth, move, verify, distinguish, batch.
Inputs may be a literal Gauss code, a name from the built-in catalog, or a
path to a file holding a code.  Exit codes: 0 success (PASS/DISTINCT),
1 verification failure or inconclusive comparison, 2 malformed input,
3 precondition violation.

Invariant sets are comma-separated names with optional parameters, e.g.
``aip,djn(2),fnmk(1,1,1)``; a bare parametric name takes its parameters
from --n/--m/--k/--i.  ``all`` expands to a default battery suited to the
input's component count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import invariants as inv
from .catalog import load_catalog, lookup
from .diagram import Diagram, parse, serialize
from .errors import (
    GaussCodeError,
    InconsistentLabelingError,
    PreconditionError,
    ValidationError,
)
from .laurent import LaurentPoly
from .moves import KINDS, apply_move, enumerate_moves


def _resolve(text: str) -> Diagram:
    entry = lookup(text)
    if entry is not None:
        return entry.diagram()
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            lines = [
                ln.strip() for ln in fh
                if ln.strip() and not ln.lstrip().startswith("#")
            ]
        return parse("".join(lines))
    return parse(text)


def _parse_inv_spec(token: str, args) -> tuple[str, dict]:
    token = token.strip()
    if "(" in token:
        if not token.endswith(")"):
            raise PreconditionError(f"malformed invariant spec {token!r}")
        name, rest = token[:-1].split("(", 1)
        values = [int(v) for v in rest.split(",")] if rest else []
        spec = inv.REGISTRY.get(name)
        if spec is None:
            raise PreconditionError(f"unknown invariant {name!r}")
        if len(values) != len(spec.params):
            raise PreconditionError(
                f"invariant {name!r} takes {len(spec.params)} parameter(s)"
            )
        return name, dict(zip(spec.params, values))
    name = token
    spec = inv.REGISTRY.get(name)
    if spec is None:
        raise PreconditionError(f"unknown invariant {name!r}")
    defaults = {"n": args.n, "m": args.m, "k": args.k, "i": args.i}
    return name, {p: defaults[p] for p in spec.params}


def _default_battery(d: Diagram, window: int) -> list[tuple[str, dict]]:
    out: list[tuple[str, dict]] = []
    if d.n_components == 1:
        out.append(("aip", {}))
        for n in range(1, window + 1):
            out.append(("djn", {"n": n}))
        out.append(("fpoly", {"n": 1}))
        out.append(("djnm", {"n": 1, "m": 1}))
        out.append(("fnmk", {"n": 1, "m": 1, "k": 1}))
        out.append(("ftilde", {"n": 1, "k": 1, "m": 0}))
    elif d.n_components == 2:
        out.append(("lk", {}))
        out.append(("span", {}))
        for n in range(1, window + 1):
            out.append(("spannk", {"n": n, "k": 0}))
            out.append(("fspannk", {"n": n, "k": 0}))
        out.append(("fspannk", {"n": 1, "k": 1}))
    for i in range(1, d.n_components + 1):
        out.append(("bsum", {"i": i}))
        out.append(("bflat", {"i": i}))
    return out


def _split_specs(arg: str) -> list[str]:
    """Split on commas that sit outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in arg:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def _inv_list(arg: str, d: Diagram, args) -> list[tuple[str, dict]]:
    if arg == "all":
        return _default_battery(d, args.window)
    return [_parse_inv_spec(tok, args) for tok in _split_specs(arg)]


def _fmt_spec(name: str, params: dict) -> str:
    spec = inv.REGISTRY[name]
    if not spec.params:
        return name
    return f"{name}({','.join(str(params[p]) for p in spec.params)})"


def _render_value(value, as_json: bool):
    if isinstance(value, LaurentPoly):
        return value.to_json_dict() if as_json else value.render()
    if isinstance(value, inv.LinkingNumbers):
        if as_json:
            return {"over": value.over, "under": value.under, "span": value.span}
        return f"over={value.over} under={value.under} span={value.span}"
    if isinstance(value, inv.FlatSum):
        if as_json:
            return {"terms": [
                {"coef": c, "diagram": serialize(rep)} for _, c, rep in value.terms
            ]}
        return value.render()
    return value if as_json else str(value)


# -- subcommands --------------------------------------------------------


def cmd_parse(args) -> int:
    d = _resolve(args.input)
    if args.json:
        print(json.dumps({
            "code": serialize(d),
            "components": d.n_components,
            "crossings": d.n_crossings,
        }))
    else:
        print(serialize(d))
    return 0


def cmd_invariant(args) -> int:
    d = _resolve(args.input)
    name, params = _parse_inv_spec(args.inv, args)
    value = inv.compute_invariant(name, d, params)
    out = _render_value(value, args.json)
    print(json.dumps(out) if args.json else out)
    return 0


def cmd_smooth(args) -> int:
    from .smoothing import smooth1, smooth2, smooth3

    d = _resolve(args.input)
    fn = {1: smooth1, 2: smooth2, 3: smooth3}[args.type]
    print(serialize(fn(d, args.at)))
    return 0


def cmd_move(args) -> int:
    d = _resolve(args.input)
    kinds = tuple(args.kinds.split(",")) if args.kinds else KINDS
    sites = enumerate_moves(d, kinds)
    if args.apply is None:
        for i, m in enumerate(sites):
            variant = f" variant={m.variant}" if m.variant else ""
            print(f"{i}: {m.kind} at {m.location}{variant}")
        return 0
    if not 0 <= args.apply < len(sites):
        raise PreconditionError(
            f"move index {args.apply} out of range (0..{len(sites) - 1})"
        )
    print(serialize(apply_move(d, sites[args.apply])))
    return 0


def cmd_verify(args) -> int:
    d = _resolve(args.input)
    todo = _inv_list(args.inv, d, args)
    baseline = {}
    for name, params in todo:
        baseline[(name, tuple(sorted(params.items())))] = inv.comparable_invariant(
            name, d, params, args.depth, args.window
        )
    import random as _random

    rng = _random.Random(args.seed)
    cur = d
    failures = {}
    for step in range(1, args.steps + 1):
        budget = args.max_crossings - cur.n_crossings
        sites = [m for m in enumerate_moves(cur) if m.crossing_delta <= budget]
        if not sites:
            break
        cur = apply_move(cur, sites[rng.randrange(len(sites))])
        for name, params in todo:
            key = (name, tuple(sorted(params.items())))
            if key in failures:
                continue
            got = inv.comparable_invariant(name, cur, params, args.depth, args.window)
            if got != baseline[key]:
                failures[key] = step
    print(f"verify steps={args.steps} seed={args.seed} "
          f"max-crossings={args.max_crossings}")
    for name, params in todo:
        key = (name, tuple(sorted(params.items())))
        label = _fmt_spec(name, params)
        if key in failures:
            print(f"FAIL {label} at step {failures[key]}")
        else:
            print(f"PASS {label}")
    verdict = "FAIL" if failures else "PASS"
    print(f"RESULT {verdict}")
    return 1 if failures else 0


def cmd_distinguish(args) -> int:
    da = _resolve(args.input_a)
    db = _resolve(args.input_b)
    if args.inv == "all":
        if da.n_components != db.n_components:
            print(f"DISTINCT via component count: "
                  f"{da.n_components} != {db.n_components}")
            return 0
        todo = _default_battery(da, args.window)
    else:
        todo = _inv_list(args.inv, da, args)
    for name, params in todo:
        try:
            va = inv.comparable_invariant(name, da, params, args.depth, args.window)
            vb = inv.comparable_invariant(name, db, params, args.depth, args.window)
        except PreconditionError:
            continue
        if va != vb:
            label = _fmt_spec(name, params)
            ra = _render_value(inv.compute_invariant(name, da, params), False)
            rb = _render_value(inv.compute_invariant(name, db, params), False)
            print(f"DISTINCT via {label}: {ra}  !=  {rb}")
            return 0
    print("INCONCLUSIVE")
    return 1


def cmd_batch(args) -> int:
    entries = load_catalog(args.catalog)
    results = []
    for entry in entries:
        d = entry.diagram()
        row = {"name": entry.name}
        for name, params in _inv_list(args.inv, d, args):
            label = _fmt_spec(name, params)
            try:
                value = inv.compute_invariant(name, d, params)
            except PreconditionError:
                row[label] = None
                continue
            row[label] = _render_value(value, args.json)
        results.append(row)
    if args.json:
        print(json.dumps(results))
    else:
        for row in results:
            cells = [row["name"]]
            cells += [
                f"{k}={'-' if v is None else v}"
                for k, v in row.items() if k != "name"
            ]
            print("\t".join(cells))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vknots",
        description="Virtual knot and link invariants on Gauss codes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_params=True):
        p.add_argument("--json", action="store_true", help="JSON output")
        if with_params:
            p.add_argument("--n", type=int, default=1)
            p.add_argument("--m", type=int, default=1)
            p.add_argument("--k", type=int, default=1)
            p.add_argument("--i", type=int, default=1)
            p.add_argument("--window", type=int, default=inv.DEFAULT_WINDOW)
            p.add_argument("--depth", type=int, default=inv.DEFAULT_DEPTH)

    p = sub.add_parser("parse", help="validate and canonicalize a Gauss code")
    p.add_argument("input")
    common(p, with_params=False)
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("invariant", help="compute one invariant")
    p.add_argument("--inv", required=True)
    p.add_argument("input")
    common(p)
    p.set_defaults(fn=cmd_invariant)

    p = sub.add_parser("smooth", help="apply a smoothing at a crossing")
    p.add_argument("--type", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--at", type=int, required=True, metavar="ID")
    p.add_argument("input")
    common(p, with_params=False)
    p.set_defaults(fn=cmd_smooth)

    p = sub.add_parser("move", help="list or apply Reidemeister move sites")
    p.add_argument("--list", action="store_true")
    p.add_argument("--apply", type=int, default=None, metavar="INDEX")
    p.add_argument("--kinds", default=None,
                   help="comma list from: " + ",".join(KINDS))
    p.add_argument("input")
    common(p, with_params=False)
    p.set_defaults(fn=cmd_move)

    p = sub.add_parser("verify", help="random-walk invariance check")
    p.add_argument("--inv", default="all")
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-crossings", type=int, default=12)
    p.add_argument("input")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("distinguish", help="try to separate two diagrams")
    p.add_argument("--inv", default="all")
    p.add_argument("input_a")
    p.add_argument("input_b")
    common(p)
    p.set_defaults(fn=cmd_distinguish)

    p = sub.add_parser("batch", help="evaluate invariants over a catalog file")
    p.add_argument("--inv", default="all")
    p.add_argument("catalog")
    common(p)
    p.set_defaults(fn=cmd_batch)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GaussCodeError, ValidationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, InconsistentLabelingError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
