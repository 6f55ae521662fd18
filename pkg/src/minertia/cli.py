"""Command-line front end.

Subcommands: inertia, classify, degree, bound, search, grow, catalog,
check.  Output is one newline-terminated JSON document by default, or CSV
with a header row via --format csv where tabular output makes sense.

Exit codes: 0 success, 1 usage error, 2 invalid input data, 3 internal
inconsistency (arithmetic self-check failure).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from . import bounds as bounds_mod
from . import degree as degree_mod
from . import search as search_mod
from . import selfcheck
from .errors import InconsistencyError, MinertiaError
from .hermitian_core import HermitianMatrix, inertia
from .strata import classify_cone, classify_d2, d2_real_dimension

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3

_DEFAULTS = search_mod.SearchConfig(seed=0)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with_usage(message))

    def exit_with_usage(self, message) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def _emit(doc, out) -> None:
    json.dump(doc, out)
    out.write("\n")


def _emit_csv(rows: List[list], header: List[str], out) -> None:
    writer = csv.writer(out)
    writer.writerow(header)
    writer.writerows(rows)


def _load_matrix(path: str) -> HermitianMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"matrix file is not valid JSON: {exc}") from exc
    return HermitianMatrix.from_json(obj)


def _parse_range(spec: str):
    lo, sep, hi = spec.partition("..")
    if not sep:
        raise ValueError(f"range must look like A..B, got {spec!r}")
    return int(lo), int(hi)


def _parse_pencil(spec: str) -> bounds_mod.PencilData:
    # canonical form: b=B,fibers=l1,l2,...
    head, _, tail = spec.partition(",fibers=")
    if not head.startswith("b="):
        raise ValueError(f"pencil must look like b=B[,fibers=l1,l2,...], got {spec!r}")
    b = int(head[2:])
    fibers = [int(x) for x in tail.split(",") if x] if tail else []
    return bounds_mod.PencilData(b=b, fiber_component_counts=tuple(fibers))


def _cmd_inertia(args, out) -> int:
    x = _load_matrix(args.matrix)
    _emit(inertia(x).to_json(), out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    x = _load_matrix(args.matrix)
    doc = {"q": x.q, "d2": classify_d2(x).value, "cone": None, "apex_shift": None}
    if args.cone:
        cone = classify_cone(x)
        doc.update(cone.to_json())
    doc["d2_real_dimension"] = d2_real_dimension(x.q)
    _emit(doc, out)
    return EXIT_OK


def _cmd_degree(args, out) -> int:
    if args.q is None and args.table is None:
        raise ValueError("degree needs --q N or --table A..B")
    if args.q is not None:
        rec = degree_mod.parity_record(args.q)
        _emit(rec.to_json(), out)
        return EXIT_OK
    lo, hi = _parse_range(args.table)
    limit = 0 if args.parity_only else degree_mod.MATERIALIZE_LIMIT
    records = [
        degree_mod.parity_record(q, materialize_limit=limit)
        for q in range(max(lo, 3), hi + 1)
    ]
    if args.format == "csv":
        _emit_csv([rec.csv_row() for rec in records], degree_mod.CSV_HEADER, out)
    else:
        _emit([rec.to_json() for rec in records], out)
    return EXIT_OK


def _cmd_bound(args, out) -> int:
    pencil = _parse_pencil(args.pencil) if args.pencil else None
    if args.table:
        lo, hi = _parse_range(args.table)
        reports = [
            bounds_mod.best_bound(
                bounds_mod.Assumptions(
                    q=q,
                    p_g=args.pg,
                    no_irregular_pencils_genus_ge2=args.no_irregular_pencils,
                    pencil=pencil,
                )
            )
            for q in range(max(lo, 1), hi + 1)
        ]
        if args.format == "csv":
            rows = [[r.q, r.best, ";".join(r.best_names)] for r in reports]
            _emit_csv(rows, ["q", "best", "best_names"], out)
        else:
            _emit([r.to_json() for r in reports], out)
        return EXIT_OK
    if args.q is None:
        raise ValueError("bound needs --q N or --table A..B")
    report = bounds_mod.best_bound(
        bounds_mod.Assumptions(
            q=args.q,
            p_g=args.pg,
            no_irregular_pencils_genus_ge2=args.no_irregular_pencils,
            pencil=pencil,
        )
    )
    _emit(report.to_json(), out)
    return EXIT_OK


def _cmd_search(args, out) -> int:
    cfg = search_mod.SearchConfig(
        seed=args.seed,
        samples=args.samples,
        descent_steps=args.descent_steps,
        float_tolerance=args.float_tolerance,
        workers=args.workers,
    )
    basis = search_mod.random_subspace(args.q, args.dim, args.seed)
    report = search_mod.run_search(basis, cfg)
    _emit(report.to_json(), out)
    return EXIT_OK


def _cmd_grow(args, out) -> int:
    cfg = search_mod.SearchConfig(
        seed=args.seed,
        samples=args.samples,
        descent_steps=args.descent_steps,
        workers=args.workers,
    )
    report = search_mod.grow_subspace(args.q, args.target, cfg)
    _emit(report.to_json(), out)
    return EXIT_OK


def _cmd_catalog(args, out) -> int:
    records = bounds_mod.catalog()
    if args.format == "csv":
        rows = [
            [r.name, r.q, r.p_g, r.h11, r.no_irregular_pencils, r.note]
            for r in records
        ]
        _emit_csv(rows, ["name", "q", "p_g", "h11", "no_irregular_pencils", "note"], out)
    else:
        _emit([r.to_json() for r in records], out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    ok = selfcheck.run_all(lambda line: print(line, file=out))
    if not ok:
        raise InconsistencyError("self-check failed")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="minertia", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("inertia", help="exact signature of a Hermitian matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON file, or - for stdin")
    p.set_defaults(func=_cmd_inertia)

    p = sub.add_parser("classify", help="stratum and cone membership")
    p.add_argument("--matrix", required=True)
    p.add_argument("--cone", action="store_true", help="also classify cone membership")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("degree", help="degree of the rank <= 2 locus and parity")
    p.add_argument("--q", type=int)
    p.add_argument("--table", help="range A..B")
    p.add_argument("--parity-only", action="store_true", dest="parity_only")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("bound", help="aggregate h^{1,1} lower bounds")
    p.add_argument("--q", type=int)
    p.add_argument("--table", help="range A..B for a sweep")
    p.add_argument("--pg", type=int)
    p.add_argument(
        "--no-irregular-pencils",
        action="store_true",
        dest="no_irregular_pencils",
        help="assume no irregular pencils of genus >= 2",
    )
    p.add_argument("--pencil", help="b=B[,fibers=l1,l2,...]")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("search", help="falsify minimal inertia >= 2 on a random subspace")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=_DEFAULTS.samples)
    p.add_argument("--descent-steps", type=int, default=_DEFAULTS.descent_steps, dest="descent_steps")
    p.add_argument("--float-tolerance", type=float, default=_DEFAULTS.float_tolerance, dest="float_tolerance")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("grow", help="grow a candidate subspace (non-certified)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=_DEFAULTS.samples)
    p.add_argument("--descent-steps", type=int, default=_DEFAULTS.descent_steps, dest="descent_steps")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_grow)

    p = sub.add_parser("catalog", help="known-surface table")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("check", help="built-in self-test suite")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args, sys.stdout)
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except AssertionError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (MinertiaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
