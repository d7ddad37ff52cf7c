"""The ``trip`` command line.

Exit codes: 0 success, 2 unparseable input, 3 input outside a map's
domain, 4 depth above the cap, 5 a verification found a mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .classical import ClassicalMapId, verify_equivalence
from .engine import (
    DEFAULT_ONES_CAP,
    PermTriple,
    apply_triangle_function,
    build_trip_map,
    check_point,
    enumerate_family,
    tree_sequence,
    trip_sequence,
)
from .errors import DepthLimitExceeded, DomainError, ParseError, TripError
from .exact.parse import parse_bits, parse_digits, parse_point
from .periodicity import (
    PeriodicWord,
    catalog_lookup,
    classify_word,
    minimal_polynomial_of_point,
    reduce_triple,
)
from .render import subdivision_figure, to_svg
from .simplex import build_nd, duplicate_classes, simplex_apply, simplex_sequence, unique_count_bound

EXIT_PARSE, EXIT_DOMAIN, EXIT_DEPTH, EXIT_VERIFY = 2, 3, 4, 5


class VerificationFailed(Exception):
    def __init__(self, record):
        super().__init__("verification failed")
        self.record = record


def _triple(text: str, degree: int | None = None):
    try:
        return build_trip_map(PermTriple.parse(text, degree))
    except TripError:
        raise
    except (ValueError, KeyError, IndexError) as exc:
        raise ParseError(f"bad triple {text!r}: {exc}") from exc


def _point(text: str):
    try:
        return parse_point(text)
    except TripError:
        raise
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        raise ParseError(f"bad point {text!r}: {exc}") from exc


def _ones_cap(args) -> int:
    return args.max_steps if args.max_steps is not None else DEFAULT_ONES_CAP


# ----------------------------------------------------------------- verbs


def cmd_sequence(args) -> dict:
    m = _triple(args.triple)
    p = check_point(_point(args.point), m.dim)
    trip = trip_sequence(p, m, args.terms, _ones_cap(args))
    tree = tree_sequence(p, m, args.depth, _ones_cap(args))
    rec = {
        "command": "sequence",
        "triple": str(m.triple),
        "point": p,
        "tree": {"bits": list(tree.bits), "termination": tree.termination},
        "trip": {"digits": list(trip.digits), "termination": trip.termination},
    }
    if args.orbit:
        rec["orbit"] = [list(q) for q in trip.orbit]
    return rec


def cmd_tree(args) -> dict:
    m = _triple(args.triple)
    p = check_point(_point(args.point), m.dim)
    tree = tree_sequence(p, m, args.depth, _ones_cap(args))
    return {
        "command": "tree",
        "triple": str(m.triple),
        "point": p,
        "tree": {"bits": list(tree.bits), "termination": tree.termination},
    }


def _catalog_row(m) -> dict:
    red, rho = reduce_triple(m.triple)
    entry = catalog_lookup(red) if red.degree == 3 else None
    row = {
        "triple": str(m.triple),
        "F0": m.f0,
        "F1": m.f1,
        "reduced": str(red),
        "rho": str(rho),
        "verdict": entry.verdict if entry else "OutsideCatalog",
    }
    if entry and entry.witness is not None:
        row["witness"] = str(entry.witness)
    return row


def cmd_enumerate(args) -> dict:
    rows = [_catalog_row(m) for m in enumerate_family(args.degree)]
    return {"command": "enumerate", "degree": args.degree, "count": len(rows), "rows": rows}


def _witness_record(w) -> dict:
    rec = {
        "eigenvalue": w.eigenvalue,
        "vector": list(w.vector),
        "inClosedTriangle": w.in_closed_triangle,
    }
    if w.point is not None:
        rec["point"] = list(w.point)
        rec["minpolys"] = [str(p) for p in minimal_polynomial_of_point(w)]
    return rec


def cmd_classify(args) -> dict:
    m = _triple(args.triple)
    if args.trip:
        word = PeriodicWord.from_trip(parse_digits(args.word))
    else:
        word = PeriodicWord(parse_bits(args.word))
    c = classify_word(m, word, square=args.square)
    ev = c.evidence
    rec = {
        "command": "classify",
        "triple": str(m.triple),
        "word": list(word.period),
        "squared": args.square,
        "verdict": c.verdict,
        "witnesses": [_witness_record(w) for w in c.witnesses],
        "evidence": {
            "periodMatrix": ev["period_matrix"],
            "mapForm": ev["map_form"],
            "charPoly": str(ev["char_poly"]),
            "notes": list(ev["notes"]),
        },
    }
    if c.edge:
        rec["edge"] = c.edge
    if m.dim == 3:
        red, _ = reduce_triple(m.triple)
        rec["catalog"] = catalog_lookup(red).verdict
    return rec


def cmd_verify(args) -> dict:
    maps = list(ClassicalMapId) if args.map == "all" else [ClassicalMapId.parse(args.map)]
    reports = []
    for mid in maps:
        r = verify_equivalence(mid, args.samples, args.seed)
        reports.append(
            {
                "map": r.map,
                "samples": r.samples,
                "seed": r.seed,
                "mismatches": len(r.mismatches),
                "passed": r.passed,
                "firstMismatch": r.mismatches[0] if r.mismatches else None,
            }
        )
    rec = {"command": "verify-classical", "reports": reports, "passed": all(r["passed"] for r in reports)}
    if not rec["passed"]:
        raise VerificationFailed(rec)
    return rec


def cmd_render(args):
    m = _triple(args.triple)
    fig = subdivision_figure(m, args.depth)
    if args.format == "json":
        return {
            "command": "render",
            "triple": fig.triple,
            "depth": fig.depth,
            "area": fig.total_area(),
            "triangles": [{"word": t.label, "vertices": [list(v) for v in t.vertices]} for t in fig.triangles],
        }
    return to_svg(fig, args.precision if args.precision is not None else 9)


def cmd_simplex(args) -> dict:
    if args.action == "count":
        return _count(args.dim, args.sweep)
    m = build_nd(args.dim, args.triple)
    p = check_point(_point(args.point), m.dim)
    if args.action == "apply":
        if args.k is None:
            image = apply_triangle_function(p, m)
        else:
            image = simplex_apply(m, args.k, p, check=not args.unchecked)
        return {"command": "simplex apply", "dim": m.dim, "triple": str(m.triple), "point": p, "image": image}
    seq = simplex_sequence(p, m, args.terms, _ones_cap(args))
    return {
        "command": "simplex sequence",
        "dim": m.dim,
        "triple": str(m.triple),
        "point": p,
        "digits": list(seq.digits),
        "termination": seq.termination,
    }


def _count(dim: int, sweep: bool) -> dict:
    rec = {"command": "count", "dim": dim, "simplexDim": dim - 1, "bound": unique_count_bound(dim - 1)}
    if sweep:
        r = duplicate_classes(dim)
        rec.update({"triples": r.triples, "classes": r.classes, "largestClass": r.largest_class})
    return rec


def cmd_count(args) -> dict:
    return _count(args.dim, args.sweep)


# ---------------------------------------------------------------- output


def _text(rec) -> str:
    if isinstance(rec, str):
        return rec
    lines = []
    for key, val in serialize.jsonable(rec, 12).items():
        if isinstance(val, dict) and set(val) == {"exact", "decimal"}:
            val = val["exact"]
        if isinstance(val, list) and val and isinstance(val[0], dict) and set(val[0]) == {"exact", "decimal"}:
            val = "(" + ", ".join(v["exact"] for v in val) + ")"
        if key == "rows":
            lines.extend(f"{r['triple']}\t{r['verdict']}\t{r.get('witness', '')}" for r in val)
            continue
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _emit(rec, args) -> None:
    precision = args.precision if args.precision is not None else 12
    if isinstance(rec, str):
        out = rec
    elif args.format == "text":
        out = _text(rec)
    else:
        out = serialize.dumps(rec, precision)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


_SHARED = ("format", "out", "precision", "max_steps")


def _shared_options(prefix: str = "") -> argparse.ArgumentParser:
    # The top-level copies use prefixed dests so a subcommand cannot reset them.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "svg"), dest=prefix + "format", default=None)
    common.add_argument("--out", dest=prefix + "out", default=None, help="write output to this file")
    common.add_argument("--precision", type=int, dest=prefix + "precision", default=None, help="decimal digits")
    common.add_argument(
        "--max-steps",
        type=int,
        dest=prefix + "max_steps",
        default=None,
        help="cap on consecutive 1-bits before InfiniteOnesTail",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _shared_options()
    p = argparse.ArgumentParser(
        prog="trip", description="Triangle partition maps with exact arithmetic.", parents=[_shared_options("global_")]
    )
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("sequence", parents=[common], help="tree and trip sequences of a point")
    s.add_argument("--triple", default="(e,e,e)")
    s.add_argument("--point", required=True)
    s.add_argument("--terms", type=int, default=10)
    s.add_argument("--depth", type=int, default=32)
    s.add_argument("--orbit", action="store_true")
    s.set_defaults(func=cmd_sequence)

    s = sub.add_parser("tree", parents=[common], help="tree sequence of a point")
    s.add_argument("--triple", default="(e,e,e)")
    s.add_argument("--point", required=True)
    s.add_argument("--depth", type=int, default=32)
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("enumerate", parents=[common], help="all triples with matrices and catalog verdicts")
    s.add_argument("--degree", type=int, default=3)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[common], help="segment or point for a periodic word")
    s.add_argument("--triple", required=True)
    s.add_argument("--word", required=True, help="period as bits, or trip digits with --trip")
    s.add_argument("--trip", action="store_true", help="read --word as trip digits")
    s.add_argument("--square", dest="square", action="store_true", default=True)
    s.add_argument("--no-square", dest="square", action="store_false")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify-classical", parents=[common], help="compare classical maps with their combos")
    s.add_argument("--map", default="all", help="brun, monkemeyer, fully-subtractive, guting or all")
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="SVG of the subdivision at a depth")
    s.add_argument("--triple", default="(e,e,e)")
    s.add_argument("--depth", type=int, default=1)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("simplex", parents=[common], help="simplex maps in matrix dimension d")
    s.add_argument("action", choices=("apply", "sequence", "count"))
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--triple", default="(e,e,e)")
    s.add_argument("--point")
    s.add_argument("--k", type=int, help="region index for apply (found by descent when omitted)")
    s.add_argument("--unchecked", action="store_true", help="apply region k without a membership test")
    s.add_argument("--terms", type=int, default=10)
    s.add_argument("--sweep", action="store_true", help="exhaustive duplicate sweep (count)")
    s.set_defaults(func=cmd_simplex)

    s = sub.add_parser("count", parents=[common], help="bound on distinct simplex algorithms")
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--sweep", action="store_true")
    s.set_defaults(func=cmd_count)
    return p


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(f"trip: {kind}: {message}\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in _SHARED:
        if getattr(args, name) is None:
            setattr(args, name, getattr(args, "global_" + name))
    if args.format is None:
        args.format = "svg" if args.verb == "render" else "json"
    if args.verb == "simplex" and args.action != "count" and not args.point:
        parser.error("simplex apply/sequence need --point")
    try:
        rec = args.func(args)
    except VerificationFailed as exc:
        _emit(exc.record, args)
        return EXIT_VERIFY
    except ParseError as exc:
        return _fail(EXIT_PARSE, "ParseError", str(exc))
    except DepthLimitExceeded as exc:
        return _fail(EXIT_DEPTH, type(exc).__name__, str(exc))
    except (DomainError, TripError, ValueError) as exc:
        return _fail(EXIT_DOMAIN, type(exc).__name__, str(exc))
    _emit(rec, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
