"""Command-line front end.

Subcommands: ``check`` (property deciders on polytope files), ``construct``
(Minkowski sums, Cayley sums, dilates written back to files), ``reproduce``
(documented counterexample families), ``verify`` (randomized theorem
campaigns), ``random`` (seeded instance generation).

Exit codes: 0 when the property holds / is verified / is covered, 1 when it
fails or a campaign records violations, 2 for usage errors.  ``--format``
controls stdout; ``--out`` always writes the machine-readable JSON report,
which is byte-stable apart from its timestamp field.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .campaigns import CampaignConfig, CampaignReport, THEOREM_IDS, verify_theorem
from .covering import has_interior_translate_cover, is_2_convex_normal
from .generator import random_lattice_polytope
from .geometry import CellBudgetExceeded, GeometryError
from .polyfile import PolytopeFileError, load_polytope, save_polytope
from .polytope import cayley_sum, dilate, minkowski_sum
from .properties import (
    Verdict,
    edge_length_criterion,
    is_gorenstein,
    is_idp,
    is_tuple_idp,
    level_status,
)
from .reproduce import EXAMPLE_NAMES, reproduce_example

PROPERTIES = ("idp", "tuple-idp", "2cn", "cond01", "level", "gorenstein", "edge-criterion")


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return [_jsonable(e) for e in x]
    return x


def _pretty(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return "(" + ", ".join(_pretty(e) for e in x) + ")"
    return str(x)


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    doc = dict(doc)
    doc["version"] = __version__
    if getattr(args, "out", None):
        stamped = dict(doc)
        stamped["timestamp"] = _timestamp()
        Path(args.out).write_text(
            json.dumps(stamped, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    if getattr(args, "format", "text") == "json":
        stamped = dict(doc)
        stamped["timestamp"] = _timestamp()
        print(json.dumps(stamped, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# check


def _run_check(args) -> int:
    Ps = [load_polytope(p) for p in args.paths]
    prop = args.property
    if prop != "tuple-idp" and len(Ps) != 1:
        raise UsageError(f"property {prop} takes exactly one polytope file")
    config = {
        "paths": list(args.paths),
        "property": prop,
        "max_degree": args.max_degree,
        "horizon": args.horizon,
    }
    witness = None
    degrees = None
    horizon = None
    if prop == "idp":
        rep = is_idp(Ps[0], args.max_degree)
        verdict, witness, degrees = rep.verdict.value, rep.witness, rep.degrees_checked
    elif prop == "tuple-idp":
        rep = is_tuple_idp(Ps)
        verdict, witness, degrees = rep.verdict.value, rep.witness, rep.degrees_checked
    elif prop == "level":
        rep = level_status(Ps[0], args.horizon)
        verdict, witness, degrees = rep.verdict.value, rep.witness, rep.degrees_checked
        horizon = rep.horizon_used
    elif prop == "gorenstein":
        rep = is_gorenstein(Ps[0], args.horizon)
        verdict, witness, degrees = rep.verdict.value, rep.witness, rep.degrees_checked
        horizon = rep.horizon_used
    elif prop == "edge-criterion":
        ok = edge_length_criterion(Ps[0])
        verdict = Verdict.HOLDS.value if ok else Verdict.FAILS.value
    elif prop == "2cn":
        res = is_2_convex_normal(Ps[0])
        verdict = "covered" if res.covered else "not-covered"
        witness = res.witness
    elif prop == "cond01":
        res = has_interior_translate_cover(Ps[0])
        verdict = "covered" if res.covered else "not-covered"
        witness = res.witness
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown property {prop}")

    doc = {
        "property": prop,
        "verdict": verdict,
        "witness": _jsonable(witness),
        "degrees_checked": list(degrees) if degrees else None,
        "horizon": horizon,
        "config": config,
    }
    lines = [f"property: {prop}", f"verdict: {verdict}"]
    if witness is not None:
        lines.append(f"witness: {_pretty(witness)}")
    if degrees is not None:
        lines.append(f"degrees checked: {degrees[0]}..{degrees[1]}")
        if prop in ("level", "gorenstein"):
            lines.append(f"level index: {degrees[0]}")
    if horizon is not None:
        lines.append(f"horizon: {horizon}")
    _emit(args, doc, lines)
    return 0 if verdict in ("Holds", "VerifiedUpToHorizon", "covered") else 1


# ---------------------------------------------------------------------------
# construct / random


def _run_construct(args) -> int:
    Ps = [load_polytope(p) for p in args.paths]
    if args.operation == "dilate":
        if len(Ps) != 1:
            raise UsageError("dilate takes exactly one polytope file")
        if args.factor is None or args.factor < 0:
            raise UsageError("dilate needs --factor with a nonnegative integer")
        Q = dilate(Ps[0], args.factor)
    elif args.operation == "minkowski":
        if len(Ps) < 2:
            raise UsageError("minkowski needs at least two polytope files")
        Q = minkowski_sum(Ps)
    else:
        if len(Ps) < 2:
            raise UsageError("cayley needs at least two polytope files")
        Q = cayley_sum(Ps)
    save_polytope(Q, args.out, name=args.name)
    print(f"wrote {args.out}: ambient_dim {Q.ambient_dim}, dim {Q.dim}, "
          f"{len(Q.vertices)} vertices")
    return 0


def _run_random(args) -> int:
    P = random_lattice_polytope(
        args.seed, args.ambient_dim, args.dim, args.coord_bound, args.n_points
    )
    save_polytope(P, args.out)
    print(f"wrote {args.out}: dim {P.dim}, vertices {list(P.vertices)}")
    return 0


# ---------------------------------------------------------------------------
# reproduce / verify


def _campaign_doc(rep: CampaignReport) -> dict:
    doc = rep.to_dict()
    return doc


def _campaign_lines(rep: CampaignReport) -> list[str]:
    lines = [
        f"campaign: {rep.theorem_id}",
        f"trials run: {rep.trials_run}",
        f"violations: {len(rep.violations)}",
    ]
    for v in rep.violations:
        lines.append(f"  trial {v.trial}: {v.note}")
        if v.report is not None and v.report.witness is not None:
            lines.append(f"    witness: {v.report.witness}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return lines


def _run_reproduce(args) -> int:
    params = tuple(args.params) if args.params else None
    rep = reproduce_example(args.name, params)
    _emit(args, _campaign_doc(rep), _campaign_lines(rep))
    return 0 if rep.ok else 1


def _run_verify(args) -> int:
    config = CampaignConfig(
        theorem_id=args.theorem_id,
        trials=args.trials,
        seed=args.seed,
        dim_max=args.dim_max,
        coord_bound=args.coord_bound,
        dilation_bound=args.dilation_bound,
        horizon=args.horizon,
    )
    rep = verify_theorem(config)
    _emit(args, _campaign_doc(rep), _campaign_lines(rep))
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# parser


class UsageError(Exception):
    pass


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="stdout rendering (default text)")
    p.add_argument("--out", metavar="PATH",
                   help="also write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcayley",
        description="Exact deciders and campaigns for Minkowski and Cayley sums "
        "of lattice polytopes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide a property of polytope files")
    c.add_argument("paths", nargs="+", metavar="POLYTOPE.json")
    c.add_argument("--property", required=True, choices=PROPERTIES)
    c.add_argument("--max-degree", type=int, default=None)
    c.add_argument("--horizon", type=int, default=None)
    _add_io_flags(c)
    c.set_defaults(func=_run_check)

    k = sub.add_parser("construct", help="build a new polytope file")
    k.add_argument("operation", choices=("minkowski", "cayley", "dilate"))
    k.add_argument("paths", nargs="+", metavar="POLYTOPE.json")
    k.add_argument("--factor", type=int, default=None, help="dilate factor")
    k.add_argument("--name", default=None, help="name stored in the output file")
    k.add_argument("--out", required=True, metavar="PATH")
    k.set_defaults(func=_run_construct)

    r = sub.add_parser("reproduce", help="re-derive a documented counterexample family")
    r.add_argument("name", choices=EXAMPLE_NAMES)
    r.add_argument("--params", type=int, nargs=2, metavar=("A", "B"), default=None)
    _add_io_flags(r)
    r.set_defaults(func=_run_reproduce)

    v = sub.add_parser("verify", help="run a randomized theorem campaign")
    v.add_argument("theorem_id", choices=THEOREM_IDS)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--dim-max", type=int, default=3)
    v.add_argument("--coord-bound", type=int, default=4)
    v.add_argument("--dilation-bound", type=int, default=3)
    v.add_argument("--horizon", type=int, default=None)
    _add_io_flags(v)
    v.set_defaults(func=_run_verify)

    g = sub.add_parser("random", help="generate a seeded random polytope file")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--ambient-dim", type=int, required=True)
    g.add_argument("--dim", type=int, required=True)
    g.add_argument("--coord-bound", type=int, default=4)
    g.add_argument("--n-points", type=int, default=None)
    g.add_argument("--out", required=True, metavar="PATH")
    g.set_defaults(func=_run_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PolytopeFileError, GeometryError, CellBudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
