"""Command-line interface: energy reports, enumeration, ranking, verification.

Exit codes are a stable contract: 0 success / all checks pass, 1 verification
or accuracy failure, 2 usage error (bad flags, bad parameters, parse errors),
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .census import census_cache_store, get_census
from .classify import MAX_CLASSIFY_VERTICES, ClassKind, classify, is_bipartite
from .errors import (
    CorruptCacheError,
    GraphEnergyError,
    QuadratureAccuracyError,
)
from .graph6 import graph6_decode
from .graphs import Graph, family_graph
from .spectral import b_coeffs, char_poly, eigenvalues, energy_coulson
from .verify import CHECKS, rank_class, render_json, render_text, run_checks

_EXIT_OK = 0
_EXIT_CHECK_FAILED = 1
_EXIT_USAGE = 2
_EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphenergy",
        description="Graph energy toolkit: exact spectra, censuses, and checks.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    parser.add_argument("--cache-dir", help="directory for census cache files")
    parser.add_argument(
        "--quad-tol",
        type=float,
        default=1e-7,
        help="absolute tolerance for the contour-integral energy (default 1e-7)",
    )
    parser.add_argument("--seed", type=int, help="seed for randomized checks")
    parser.add_argument(
        "--jobs",
        type=int,
        default=0,
        help="worker hint; results are identical for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_energy = sub.add_parser("energy", help="per-graph spectral report")
    p_energy.add_argument(
        "input",
        nargs="?",
        help="file of graph6 or family lines ('-' for stdin)",
    )
    p_energy.add_argument(
        "--family",
        action="append",
        default=[],
        metavar="EXPR",
        help='family expression, e.g. "S 7 7", "K4", "C3 + C3" (repeatable)',
    )

    p_enum = sub.add_parser("enumerate", help="census of connected (n,e)-graphs")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("e", type=int)
    p_enum.add_argument("--out", help="write the census in cache format here")

    p_rank = sub.add_parser("rank", help="lowest-energy graphs of a class")
    p_rank.add_argument("n", type=int)
    p_rank.add_argument("e", type=int)
    p_rank.add_argument("--top", type=int, default=10, help="rows to print (default 10)")

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument(
        "--check",
        action="append",
        choices=sorted(CHECKS) + ["all"],
        help="check name (repeatable; default all)",
    )
    p_verify.add_argument("--trials", type=int, help="trial count for seeded checks")
    return parser


def _graph_report(label: str, g: Graph, quad_tol: float) -> dict:
    p = char_poly(g)
    spec = eigenvalues(g)
    coulson = energy_coulson(p, tol=quad_tol)
    bip = is_bipartite(g)
    row = {
        "input": label,
        "n": g.n,
        "e": g.e,
        "energy": spec.energy,
        "energy_coulson": coulson.value,
        "coulson_error_bound": coulson.error_bound,
        "eigenvalues": list(spec.eigenvalues),
        "charpoly": list(p.coeffs),
        "b_coeffs": list(b_coeffs(p).values),
        "bipartite": bool(bip),
        "class_label": None,
        "class_witness": None,
    }
    if g.n <= MAX_CLASSIFY_VERTICES:
        label_obj = classify(g)
        row["class_label"] = label_obj.kind.value
        if label_obj.kind == ClassKind.CLASS2:
            row["class_witness"] = [list(c) for c in label_obj.witness]
    return row


def _parse_graph_line(line: str) -> Graph:
    # Family syntax is tried first. No line parses as both: family terms need
    # a digit and graph6 data bytes never contain one (all data chars >= '?').
    try:
        return family_graph(line)
    except GraphEnergyError as family_err:
        try:
            return graph6_decode(line)
        except GraphEnergyError as g6_err:
            raise GraphEnergyError(
                f"not a family expression ({family_err}) "
                f"nor a graph6 string ({g6_err})"
            ) from None


def _cmd_energy(args) -> int:
    items: list[tuple[str, Graph]] = []
    errors: list[str] = []
    for expr in args.family:
        try:
            items.append((expr, family_graph(expr)))
        except GraphEnergyError as exc:
            errors.append(f"--family {expr!r}: {exc}")
    if args.input:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                print(f"graphenergy: {exc}", file=sys.stderr)
                return _EXIT_IO
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                items.append((line, _parse_graph_line(line)))
            except GraphEnergyError as exc:
                errors.append(f"line {lineno}: {exc}")
    if errors:
        for msg in errors:
            print(f"graphenergy: {msg}", file=sys.stderr)
        return _EXIT_USAGE

    reports = [_graph_report(label, g, args.quad_tol) for label, g in items]
    if args.format == "json":
        print(json.dumps(reports, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["input", "n", "e", "energy", "energy_coulson", "bipartite", "class_label"]
        )
        for r in reports:
            writer.writerow(
                [r["input"], r["n"], r["e"], f"{r['energy']:.10f}",
                 f"{r['energy_coulson']:.10f}", int(r["bipartite"]),
                 r["class_label"] or ""]
            )
    else:
        for r in reports:
            print(f"graph      : {r['input']}")
            print(f"order/size : n={r['n']} e={r['e']}")
            print(f"energy     : {r['energy']:.6f}")
            print(
                f"coulson    : {r['energy_coulson']:.6f} "
                f"(+/- {r['coulson_error_bound']:.1e})"
            )
            print(
                "spectrum   : "
                + " ".join(f"{x:.6f}" for x in r["eigenvalues"])
            )
            print("charpoly   : " + " ".join(str(c) for c in r["charpoly"]))
            print("b-coeffs   : " + " ".join(str(c) for c in r["b_coeffs"]))
            print(f"bipartite  : {'yes' if r['bipartite'] else 'no'}")
            if r["class_label"]:
                line = f"class      : {r['class_label']}"
                if r["class_witness"]:
                    a, b = r["class_witness"]
                    line += f" (odd cycles {a} and {b})"
                print(line)
            print()
    return _EXIT_OK


def _cmd_enumerate(args) -> int:
    census = get_census(args.n, args.e, args.cache_dir)
    if args.out:
        try:
            census_cache_store(census, args.out)
        except OSError as exc:
            print(f"graphenergy: cannot write census: {exc}", file=sys.stderr)
            return _EXIT_IO
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "e": args.e,
                    "count": len(census),
                    "out": args.out,
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print("n,e,count")
        print(f"{args.n},{args.e},{len(census)}")
    else:
        print(len(census))
    return _EXIT_OK


def _cmd_rank(args) -> int:
    report = rank_class(args.n, args.e, args.cache_dir)
    k = max(0, args.top)
    rows = [
        {
            "rank": i + 1,
            "graph6": entry.graph6,
            "energy": entry.energy,
            "charpoly_digest": entry.charpoly_digest,
        }
        for i, entry in enumerate(report.entries[:k])
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": args.n,
                    "e": args.e,
                    "class_size": len(report.entries),
                    "ties": [list(t) for t in report.ties],
                    "rows": rows,
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["rank", "graph6", "energy", "charpoly_digest"])
        for r in rows:
            writer.writerow([r["rank"], r["graph6"], f"{r['energy']:.10f}", r["charpoly_digest"]])
    else:
        print(f"class ({args.n},{args.e}): {len(report.entries)} graphs")
        for r in rows:
            print(f"{r['rank']:>4}  {r['graph6']:<16} {r['energy']:.8f}  {r['charpoly_digest']}")
        if report.ties:
            print(f"ties within {1e-8:g}: {[t[:2] for t in report.ties]}")
    return _EXIT_OK


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.cache_dir is not None:
        kwargs["cache_dir"] = args.cache_dir
    results = run_checks(args.check, **kwargs)
    if args.format == "json":
        print(render_json(results))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["check", "passed", "evidence_rows", "runtime_seconds"])
        for r in results:
            writer.writerow([r.name, int(r.passed), len(r.evidence), f"{r.runtime:.2f}"])
    else:
        print(render_text(results))
    return _EXIT_OK if all(r.passed for r in results) else _EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "energy":
            return _cmd_energy(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "rank":
            return _cmd_rank(args)
        return _cmd_verify(args)
    except QuadratureAccuracyError as exc:
        print(f"graphenergy: accuracy failure: {exc}", file=sys.stderr)
        return _EXIT_CHECK_FAILED
    except (CorruptCacheError, OSError) as exc:
        print(f"graphenergy: {exc}", file=sys.stderr)
        return _EXIT_IO
    except GraphEnergyError as exc:
        print(f"graphenergy: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
