"""Command-line interface: classify, certify, search, nikulin, catalog.

Reports are JSON on stdout and deterministic for fixed inputs and flags
(timings are only attached under --timings, since they would break
byte-for-byte reproducibility).

Exit codes: 0 success, 2 parse/config errors, 3 guard exceeded, 4 verdict
unknown or inapplicable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import config
from .certify import certify_superhyperbolic_family, dotted_leaf_test, InapplicableError
from .diagram import CoxeterDiagram, DiagramError, parse_file
from .nikulin import three_free_contradiction
from .rationals import as_rational, rat_str
from .scalars import LevelCapExceeded
from .search import (
    GuardExceeded,
    ProductSpec,
    expansion_empty_for_order,
    expansion_search,
    lanner_universe,
    neighbor_table_check,
    product_search,
)
from .spectra import det_elim, gram, inertia
from .taxonomy import (
    catalog_json,
    catalog_match,
    classify,
    scan_subdiagrams,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_UNKNOWN = 4


def _emit(report: dict, args) -> None:
    if getattr(args, "timings", False):
        report["timings"] = {"seconds": round(time.time() - args._t0, 3)}
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _parse_assignments(pairs) -> dict:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise DiagramError(f"assignment must look like var=p/q, got {item!r}")
        var, _, value = item.partition("=")
        out[var] = as_rational(value)
    return out


def cmd_classify(args) -> int:
    D = parse_file(args.path)
    assignment = _parse_assignments(args.assign)
    sig = inertia(D, assignment)
    cls = classify(D, assignment)
    lanner = scan_subdiagrams(D, "lanner")
    parabolic = scan_subdiagrams(D, "parabolic")
    match = catalog_match(D)
    report = {
        "command": "classify",
        "input": os.path.basename(args.path),
        "class": cls.value,
        "inertia": list(sig.as_tuple()),
        "lanner_witnesses": sorted(sorted(w) for w in lanner),
        "parabolic_witnesses": sorted(sorted(w) for w in parabolic),
        "catalog_match": match.name if match else None,
    }
    _emit(report, args)
    return EXIT_OK


def cmd_certify(args) -> int:
    D = parse_file(args.path)
    report = {"command": "certify", "input": os.path.basename(args.path)}
    det = det_elim(gram(D))
    report["determinant"] = str(det)
    if args.leaf:
        w, v = args.leaf
        verdict = dotted_leaf_test(D, w, v)
        report["mode"] = "dotted_leaf"
        report["delta"] = str(verdict.determinant)
    else:
        verdict = certify_superhyperbolic_family(D)
        report["mode"] = "family"
    report["verdict"] = verdict.summary()
    _emit(report, args)
    if verdict.status != "superhyperbolic":
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_search(args) -> int:
    if args.mode == "expansion":
        if args.order:
            counts = expansion_empty_for_order(args.order, args.extra, args.cap, args.jobs)
            report = {
                "command": "search",
                "mode": "expansion",
                "order": args.order,
                "extra": args.extra,
                "cap": args.cap,
                "counts": counts,
                "result": "EMPTY" if all(v == 0 for v in counts.values()) else "NONEMPTY",
            }
            _emit(report, args)
            return EXIT_OK
        D = parse_file(args.base)
        found = expansion_search(D, args.extra, args.cap)
        report = {
            "command": "search",
            "mode": "expansion",
            "base": os.path.basename(args.base),
            "extra": args.extra,
            "cap": args.cap,
            "count": len(found),
            "result": "EMPTY" if not found else "NONEMPTY",
            "diagrams": [d.to_json_dict() for d in found],
        }
        _emit(report, args)
        return EXIT_OK
    if args.mode == "product":
        orders = tuple(int(x) for x in args.orders.split(","))
        spec = ProductSpec(tuple(sorted(orders, reverse=True)), args.cap)
        fixtures_arg = None
        if args.fixtures:
            from . import fixtures as fx

            chosen = {name: d for name, d in fx.all_fixtures()}
            if args.fixtures == "case_b":
                fixtures_arg = [d for name, d in fx.case_b_family()]
            else:
                fixtures_arg = [chosen[n] for n in args.fixtures.split(",")]
        results = product_search(spec, fixtures=fixtures_arg, jobs=args.jobs)
        for adm in results:
            sys.stdout.write(json.dumps(adm.to_json_dict(), sort_keys=True) + "\n")
        summary = {
            "command": "search",
            "mode": "product",
            "orders": list(spec.component_orders),
            "cap": spec.label_cap,
            "admissible": len(results),
            "superhyperbolic": sum(
                1 for a in results if a.verdict.status == "superhyperbolic"
            ),
        }
        _emit(summary, args)
        return EXIT_OK
    if args.mode == "neighbor":
        rep = neighbor_table_check(cap=max(args.cap, 7))
        report = {"command": "search", "mode": "neighbor"}
        report.update(rep.summary())
        report["configs"] = len(rep.configs)
        _emit(report, args)
        return EXIT_OK
    raise DiagramError(f"unknown search mode {args.mode!r}")


def cmd_nikulin(args) -> int:
    rep = three_free_contradiction(args.dim)
    report = {"command": "nikulin"}
    report.update(rep.summary())
    _emit(report, args)
    return EXIT_OK


def cmd_catalog(args) -> int:
    report = {"command": "catalog"}
    report.update(catalog_json(max_n=args.max_n, label_cap=args.cap))
    _emit(report, args)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coxeterlab",
        description="Exact classification and superhyperbolicity certificates "
        "for Coxeter diagrams.",
    )
    ap.add_argument("--timings", action="store_true", help="attach wall-clock timings")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a diagram file")
    p.add_argument("path")
    p.add_argument("--assign", action="append", metavar="VAR=P/Q",
                   help="value for a dotted variable (repeatable)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("certify", help="superhyperbolicity certificate for a family")
    p.add_argument("path")
    p.add_argument("--leaf", nargs=2, metavar=("W", "V"),
                   help="run the dotted-leaf test with hinge W and leaf V")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="expansion / product / neighbor searches")
    p.add_argument("--mode", choices=("expansion", "product", "neighbor"),
                   required=True)
    p.add_argument("--order", type=int, help="run over all Lanner bases of this order")
    p.add_argument("--base", help="diagram file with a single base")
    p.add_argument("--extra", type=int, default=1)
    p.add_argument("--orders", help="product component orders, e.g. 3,2,2,2")
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--fixtures", help="'case_b' or comma-separated fixture names")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("nikulin", help="face-count bound arithmetic")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_nikulin)

    p = sub.add_parser("catalog", help="dump the table catalogs as JSON")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--cap", type=int, default=10)
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    cap = os.environ.get(config.ENV_LEVEL_CAP)
    if cap is not None:
        try:
            config.set_level_cap(int(cap))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    ap = _build_parser()
    args = ap.parse_args(argv)
    args._t0 = time.time()
    try:
        return args.func(args)
    except (GuardExceeded,) as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except LevelCapExceeded as exc:
        print(f"level cap: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InapplicableError as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (DiagramError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
