"""Command-line surface: every library operation as a subcommand that
reads one input document and writes one schema-versioned JSON report.

Exit codes: 0 the answer was computed, 1 the input was rejected
(malformed or violating a precondition), 2 a configured resource cap
was hit before a verdict, 3 two internally redundant routes disagreed
(a library bug, never an input property).  Reports go to stdout in a
single atomic write; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path

from .algebras import ALGEBRA_KINDS, build_algebra, is_normal
from .canonical import (
    complete_intersection_check,
    downset_canonical_module,
    gorenstein_conjecture_scan,
    gorenstein_tests,
)
from .clutters import (
    COVER_ENUM_CAP,
    alexander_dual,
    clutter_from_matrix,
    primitive_cycles,
    random_clutter,
    verify_duality_theorem,
)
from .errors import DomainError, ParseError, ResourceCapError, SoundnessError
from .formats import InputDocument, format_input, parse_input
from .hilbert import ConeSpec, hilbert_basis
from .polyhedra import (
    DOWNSET_CAP_DEFAULT,
    covering_polyhedron,
    dd_convert,
    is_integral_polytope,
    maximal_vertex_data,
    polytope_P,
)
from .rounding import SYSTEMS, irp_check, mfmc_check

SCHEMA_ID = "roundnorm-report/1"
COMMANDS = ("normality", "irp", "mfmc", "duality", "canmod", "ainvariant",
            "gorenstein", "ci-check", "alexander-dual", "vertices",
            "hilbert-basis", "sweep")


def _jsonable(x):
    """Reduce library objects to JSON data; exact rationals become
    strings so nothing is rounded."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if is_dataclass(x):
        return {f.name: _jsonable(getattr(x, f.name)) for f in fields(x)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return [_jsonable(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _read_document(args) -> tuple[InputDocument, dict]:
    """Load and parse the one input document named by the flags."""
    sources = [(k, getattr(args, k.replace("-", "_"), None))
               for k in ("matrix", "graph", "clutter")]
    named = [(kind, path) for kind, path in sources if path is not None]
    if args.stdin and named:
        raise DomainError("--stdin excludes --matrix/--graph/--clutter")
    if len(named) > 1:
        raise DomainError("give exactly one of --matrix/--graph/--clutter")
    if args.stdin:
        text, source = sys.stdin.read(), "stdin"
        expected = None
    elif named:
        expected, path = named[0]
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise DomainError(f"cannot read {path}: {e.strerror}")
        source = path
    else:
        raise DomainError("no input given; use --matrix/--graph/--clutter "
                          "or --stdin")
    doc = parse_input(text, "json" if args.json else None)
    if expected is not None and doc.kind != expected:
        raise DomainError(
            f"input is a {doc.kind} but was passed as --{expected}")
    meta = {"kind": doc.kind,
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
            "source": source}
    return doc, meta


def _as_clutter(doc: InputDocument):
    if doc.kind == "clutter":
        return doc.payload
    if doc.kind == "graph":
        return doc.payload.clutter()
    return clutter_from_matrix(doc.payload)


def _require_graph(doc: InputDocument, command: str):
    if doc.kind != "graph":
        raise DomainError(f"{command} requires a graph input")
    return doc.payload


# --- one handler per command; each returns (result, caps) ----------------


def _cmd_normality(args, doc):
    matrix = doc.as_matrix()
    cert = is_normal(build_algebra(args.algebra, matrix,
                                   downset_cap=args.downset_cap))
    result = {"algebra": args.algebra, "normal": cert.verdict,
              "witness": _jsonable(cert.witness),
              "basis_size": None if cert.basis is None else len(cert.basis)}
    return result, {"downset_cap": args.downset_cap}


def _cmd_irp(args, doc):
    verdict = irp_check(args.system, doc.as_matrix(),
                        oracle_box=args.box if args.oracle else None)
    caps = {"oracle_box": args.box} if args.oracle else {}
    return _jsonable(verdict), caps


def _cmd_mfmc(args, doc):
    verdict = mfmc_check(doc.as_matrix(),
                         oracle_box=args.box if args.oracle else None)
    caps = {"cover_enum_cap": COVER_ENUM_CAP}
    if args.oracle:
        caps["oracle_box"] = args.box
    return _jsonable(verdict), caps


def _cmd_duality(args, doc):
    return _jsonable(verify_duality_theorem(_as_clutter(doc))), {}


def _cmd_canmod(args, doc):
    report = downset_canonical_module(doc.as_matrix(),
                                      downset_cap=args.downset_cap)
    return _jsonable(report), {"downset_cap": args.downset_cap}


def _cmd_ainvariant(args, doc):
    report = downset_canonical_module(doc.as_matrix(),
                                      downset_cap=args.downset_cap)
    return ({"a_invariant": report.a_invariant,
             "gorenstein": report.gorenstein},
            {"downset_cap": args.downset_cap})


def _cmd_gorenstein(args, doc):
    report = gorenstein_tests(doc.as_matrix(), downset_cap=args.downset_cap)
    return _jsonable(report), {"downset_cap": args.downset_cap}


def _cmd_ci_check(args, doc):
    g = _require_graph(doc, "ci-check")
    verdict = complete_intersection_check(g)
    return ({"complete_intersection": verdict,
             "primitive_cycle_count": len(primitive_cycles(g)),
             "independent_cycle_count":
                 len(g.edges) - g.vertex_count + 1}, {})


def _cmd_alexander_dual(args, doc):
    dual = alexander_dual(_as_clutter(doc), cap_vertices=args.cover_cap)
    return ({"vertices": dual.vertex_count,
             "edges": [list(e) for e in dual.edges],
             "text": format_input(InputDocument("clutter", dual))},
            {"cover_enum_cap": args.cover_cap})


def _cmd_vertices(args, doc):
    matrix = doc.as_matrix()
    if args.polyhedron == "leq1":
        rep = dd_convert(polytope_P(matrix))
        maximal = _jsonable(maximal_vertex_data(rep))
    else:
        rep = dd_convert(covering_polyhedron(matrix))
        maximal = None
    return ({"polyhedron": args.polyhedron,
             "vertices": _jsonable(rep.vertices),
             "rays": _jsonable(rep.rays),
             "integral": is_integral_polytope(rep) if not rep.rays else None,
             "maximal_vertex_data": maximal}, {})


def _cmd_hilbert_basis(args, doc):
    matrix = doc.as_matrix()
    cert = hilbert_basis(ConeSpec.from_vectors(matrix.columns(),
                                               matrix.rows))
    return {"basis": _jsonable(cert.basis),
            "positive_functional": _jsonable(cert.positive_functional)}, {}


def _cmd_sweep(args, doc):
    if args.kind == "duality":
        rng = random.Random(args.seed)
        valid = 0
        for _ in range(args.trials):
            c = random_clutter(rng, args.max_n, args.max_q)
            try:
                verify_duality_theorem(c)
            except DomainError:
                continue  # a zero row/column on either side
            valid += 1
        # a route disagreement would have raised SoundnessError (exit 3)
        result = {"kind": "duality", "trials": args.trials, "valid": valid,
                  "all_agree": True}
        return result, {}
    # the open-question scan is opt-in: it reports evidence, proves nothing
    if not args.experiment:
        raise DomainError(
            "the gorenstein sweep explores an open question; "
            "run it with --experiment")
    records, mismatches = gorenstein_conjecture_scan(args.max_vertices)
    rows = [{"edges": [list(e) for e in r.graph.edges],
             "vertices": r.graph.vertex_count,
             "gorenstein": r.gorenstein,
             "exact_degree_condition": r.exact_degree_condition,
             "unmixed": r.unmixed,
             "denominators_in_one_two": r.denominators_in_one_two}
            for r in records]
    result = {"kind": "gorenstein", "records": rows,
              "mismatch_count": len(mismatches)}
    return result, {"graph_enum_cap": args.max_vertices}


_HANDLERS = {
    "normality": _cmd_normality,
    "irp": _cmd_irp,
    "mfmc": _cmd_mfmc,
    "duality": _cmd_duality,
    "canmod": _cmd_canmod,
    "ainvariant": _cmd_ainvariant,
    "gorenstein": _cmd_gorenstein,
    "ci-check": _cmd_ci_check,
    "alexander-dual": _cmd_alexander_dual,
    "vertices": _cmd_vertices,
    "hilbert-basis": _cmd_hilbert_basis,
    "sweep": _cmd_sweep,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roundnorm",
        description="Exact verdicts on integer rounding properties, "
                    "normality, and canonical modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, input_=True, downset=False, oracle=False):
        p = sub.add_parser(name, help=help_)
        if input_:
            p.add_argument("--matrix", metavar="FILE",
                           help="matrix input file")
            p.add_argument("--graph", metavar="FILE",
                           help="graph input file")
            p.add_argument("--clutter", metavar="FILE",
                           help="clutter input file")
            p.add_argument("--stdin", action="store_true",
                           help="read the input document from stdin")
            p.add_argument("--json", action="store_true",
                           help="input is in the JSON format")
        if downset:
            p.add_argument("--downset-cap", type=int,
                           default=DOWNSET_CAP_DEFAULT, metavar="N",
                           help="largest allowed down-set generator count")
        if oracle:
            p.add_argument("--oracle", action="store_true",
                           help="also run the brute-force oracle route")
            p.add_argument("--box", type=int, default=3, metavar="B",
                           help="oracle sweep bound per coordinate")
        return p

    p = add("normality", "is a monomial algebra of the matrix normal",
            downset=True)
    p.add_argument("--algebra", choices=ALGEBRA_KINDS, default="rees",
                   help="which algebra kind to test")
    p = add("irp", "integer rounding property of one system", oracle=True)
    p.add_argument("--system", choices=SYSTEMS, required=True,
                   help="which rounding system to decide")
    add("mfmc", "max-flow min-cut property of a 0/1 matrix", oracle=True)
    add("duality", "the five equivalent covering/packing conditions")
    add("canmod", "canonical module of the down-set subring", downset=True)
    add("ainvariant", "a-invariant of the down-set subring", downset=True)
    add("gorenstein", "Gorenstein criteria for the down-set subring",
        downset=True)
    add("ci-check", "complete intersection test for a bipartite graph")
    p = add("alexander-dual", "clutter of minimal vertex covers")
    p.add_argument("--cover-cap", type=int, default=COVER_ENUM_CAP,
                   metavar="N", help="largest vertex count for cover "
                   "enumeration")
    p = add("vertices", "vertex/ray description of the matrix polyhedra")
    p.add_argument("--polyhedron", choices=("leq1", "geq1"), default="leq1",
                   help="which side: {x>=0, xA<=1} or {y>=0, Ay>=1}")
    add("hilbert-basis", "minimal Hilbert basis of the column cone")

    p = add("sweep", "seeded random or exhaustive evidence sweeps",
            input_=False)
    p.add_argument("--kind", choices=("duality", "gorenstein"),
                   required=True, help="which sweep to run")
    p.add_argument("--trials", type=int, default=300, metavar="N",
                   help="random trials for the duality sweep")
    p.add_argument("--seed", type=int, default=0, metavar="S",
                   help="random seed for the duality sweep")
    p.add_argument("--max-n", type=int, default=5, metavar="N",
                   help="largest vertex count for random clutters")
    p.add_argument("--max-q", type=int, default=5, metavar="Q",
                   help="largest edge count for random clutters")
    p.add_argument("--experiment", action="store_true",
                   help="acknowledge the gorenstein sweep probes an open "
                        "question")
    p.add_argument("--max-vertices", type=int, default=4, metavar="N",
                   help="largest graph size for the gorenstein sweep")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse uses exit status 2 for usage errors; 2 means a
        # resource cap here, so usage problems report as input errors
        return 0 if not e.code else 1

    started = time.monotonic()
    try:
        if args.command == "sweep":
            doc, meta = None, {"kind": "none", "sha256": None,
                               "source": None}
        else:
            doc, meta = _read_document(args)
        result, caps = _HANDLERS[args.command](args, doc)
    except (DomainError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ResourceCapError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return 2
    except SoundnessError as e:
        print(f"soundness failure: {e}", file=sys.stderr)
        return 3

    report = {
        "schema": SCHEMA_ID,
        "command": args.command,
        "input": meta,
        "caps": caps,
        "result": result,
        "timings": {"total_seconds": round(time.monotonic() - started, 6)},
    }
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
