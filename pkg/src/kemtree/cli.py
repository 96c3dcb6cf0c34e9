"""Command-line surface: invariants, enumeration, extremal search, mate
census, maximality reports, and census export.

Exact values are always printed as "p/q"; the decimal column is a
formatting of the exact value at emit time. Output on stdout is
deterministic for fixed inputs and flags; wall-clock timing goes to
stderr in table mode and into the `runtime_ms` JSON field otherwise.

Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 resource limit,
4 theorem violation.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (
    DisconnectedError,
    KemtreeError,
    NotATreeError,
    ParseError,
    ResourceLimitError,
    RouteRequiresTreeError,
    TheoremViolationError,
)
from .graphs import Tree, parse_edge_list, tree_from_graph
from .invariants import (
    compute_invariants,
    format_exact,
    format_rational,
    kemeny_wiener_route,
    omega_weights,
    wiener_edge_cut_route,
)
from .enumeration import canonical_code, census_line, enumerate_trees, family
from .transforms import generate_mates_op1, maximal_elements, theorem_leaf_filter

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_THEOREM = 4


@dataclass
class Report:
    command: str
    inputs: dict
    rows: list[dict] = field(default_factory=list)
    runtime_ms: int = 0

    def add(self, name: str, value, decimal: str | None = None) -> None:
        row = {"name": name, "value": str(value)}
        if decimal is not None:
            row["decimal"] = decimal
        self.rows.append(row)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _edges_str(t: Tree) -> str:
    return " ".join(f"{u}-{v}" for u, v in t.edges)


def _tree_row(t: Tree) -> str:
    return f"{canonical_code(t).hex()} {_edges_str(t)}"


def _parallel_map(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _add_exact(report: Report, name: str, value, places: int) -> None:
    if isinstance(value, Fraction) and value.denominator != 1:
        report.add(name, format_rational(value), format_exact(value, places))
    else:
        report.add(name, format_rational(value))


def cmd_invariants(args) -> Report:
    data = Path(args.path).read_bytes()
    g = parse_edge_list(data.decode("utf-8"))
    inv = compute_invariants(g, args.route)
    report = Report(
        command="invariants",
        inputs={
            "path": str(args.path),
            "sha256": hashlib.sha256(data).hexdigest(),
            "n": g.n,
            "m": g.m,
            "edges": [list(e) for e in g.edges],
        },
    )
    report.add("n", inv.n)
    report.add("m", inv.m)
    report.add("route", inv.route.value)
    _add_exact(report, "wiener", inv.wiener, args.places)
    _add_exact(report, "gutman", inv.gutman, args.places)
    _add_exact(report, "kemeny", inv.kemeny, args.places)
    if args.omega:
        t = tree_from_graph(g)
        for (u, v), w in sorted(omega_weights(t).weights.items()):
            report.add(f"omega[{u}-{v}]", w)
    return report


def cmd_extremal(args) -> Report:
    fam = (
        family(args.n, args.d, cap=args.cap)
        if args.d is not None
        else enumerate_trees(args.n, cap=args.cap)
    )
    if args.metric == "wiener":
        values = _parallel_map(wiener_edge_cut_route, fam.members, args.threads)
    else:
        values = _parallel_map(kemeny_wiener_route, fam.members, args.threads)
    best = min(values) if args.objective == "min" else max(values)
    attaining = [t for t, v in zip(fam.members, values) if v == best]
    report = Report(
        command="extremal",
        inputs={
            "n": args.n,
            "d": args.d,
            "objective": args.objective,
            "metric": args.metric,
        },
    )
    report.add("family_size", len(fam))
    _add_exact(report, f"{args.metric}_{args.objective}", best, args.places)
    report.add("attaining_count", len(attaining))
    for idx, t in enumerate(attaining):
        report.add(f"tree[{idx}]", _tree_row(t))
    return report


def cmd_mates(args) -> Report:
    report = Report(
        command="mates", inputs={"n": args.n, "mode": args.mode}
    )
    if args.mode == "op1":
        pairs = [
            (p.wiener, p.kemeny, p.code_a, p.tree_a, p.code_b, p.tree_b)
            for p in generate_mates_op1(args.n, cap=args.cap, orders=(args.n,))
        ]
    else:
        fam = enumerate_trees(args.n, cap=args.cap)
        values = _parallel_map(wiener_edge_cut_route, fam.members, args.threads)
        buckets: dict[int, list[Tree]] = {}
        for t, w in zip(fam.members, values):
            buckets.setdefault(w, []).append(t)
        pairs = []
        for w in sorted(buckets):
            group = buckets[w]
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    a, b = group[i], group[j]
                    pairs.append(
                        (
                            w,
                            kemeny_wiener_route(a),
                            canonical_code(a),
                            a,
                            canonical_code(b),
                            b,
                        )
                    )
    report.add("pair_count", len(pairs))
    for idx, (w, kappa, code_a, tree_a, code_b, tree_b) in enumerate(pairs):
        _add_exact(report, f"pair[{idx}].wiener", w, args.places)
        _add_exact(report, f"pair[{idx}].kemeny", kappa, args.places)
        report.add(f"pair[{idx}].a", f"{code_a.hex()} {_edges_str(tree_a)}")
        report.add(f"pair[{idx}].b", f"{code_b.hex()} {_edges_str(tree_b)}")
    return report


def cmd_maximal(args) -> Report:
    fam = family(args.n, args.d, cap=args.cap)
    survivors = theorem_leaf_filter(fam)
    maximal = maximal_elements(fam)
    if args.check_theorem:
        survivor_codes = set(survivors.codes())
        for t in maximal.members:
            if canonical_code(t) not in survivor_codes:
                raise TheoremViolationError(
                    f"maximal tree escaped the leaf filter: {_tree_row(t)}"
                )
    report = Report(command="maximal", inputs={"n": args.n, "d": args.d})
    report.add("family_size", len(fam))
    report.add("filter_size", len(survivors))
    report.add("maximal_size", len(maximal))
    for idx, t in enumerate(survivors.members):
        report.add(f"filter[{idx}]", _tree_row(t))
    best = None
    best_idx = -1
    for idx, t in enumerate(maximal.members):
        w = wiener_edge_cut_route(t)
        kappa = kemeny_wiener_route(t)
        report.add(f"maximal[{idx}].edges", _tree_row(t))
        _add_exact(report, f"maximal[{idx}].wiener", w, args.places)
        _add_exact(report, f"maximal[{idx}].kemeny", kappa, args.places)
        if best is None or kappa > best:
            best = kappa
            best_idx = idx
    if best_idx >= 0:
        report.add("argmax_kemeny", _tree_row(maximal.members[best_idx]))
        if args.check_theorem:
            report.add("theorem_check", "ok")
    return report


def cmd_enum(args) -> Report:
    fam = (
        family(args.n, args.d, cap=args.cap)
        if args.d is not None
        else enumerate_trees(args.n, cap=args.cap)
    )
    report = Report(command="enum", inputs={"n": args.n, "d": args.d})
    report.add("count", len(fam))
    for idx, t in enumerate(fam.members):
        report.add(f"tree[{idx}]", census_line(t))
    return report


def _build_parser() -> _Parser:
    parser = _Parser(prog="kemtree", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    parser.add_argument("--csv", action="store_true", help="emit CSV rows")
    parser.add_argument(
        "--places", type=int, default=4, help="decimal places for display"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="parallel family scans (output is order-independent)",
    )
    parser.add_argument(
        "--cap", type=int, default=16, help="enumeration order cap"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Wiener, Gutman, Kemeny of one graph")
    p.add_argument("path")
    p.add_argument(
        "--route",
        choices=["auto", "forest", "wiener", "edgecut"],
        default="auto",
    )
    p.add_argument("--omega", action="store_true", help="include edge weights")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("extremal", help="extremal trees of one order")
    p.add_argument("n", type=int)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--objective", choices=["min", "max"], required=True)
    p.add_argument("--metric", choices=["wiener", "kemeny"], required=True)
    p.set_defaults(fn=cmd_extremal)

    p = sub.add_parser("mates", help="equal-Kemeny tree pairs of one order")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=["census", "op1"], default="census")
    p.set_defaults(fn=cmd_mates)

    p = sub.add_parser("maximal", help="cover-maximal trees of (order, diameter)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--check-theorem", action="store_true")
    p.set_defaults(fn=cmd_maximal)

    p = sub.add_parser("enum", help="census export of one order")
    p.add_argument("n", type=int)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(fn=cmd_enum)

    return parser


def _emit(report: Report, args) -> None:
    if args.json:
        payload = {
            "command": report.command,
            "inputs": report.inputs,
            "rows": report.rows,
            "runtime_ms": report.runtime_ms,
        }
        sys.stdout.write(json.dumps(payload) + "\n")
    elif args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["name", "value", "decimal"])
        for row in report.rows:
            writer.writerow([row["name"], row["value"], row.get("decimal", "")])
        sys.stdout.write(buf.getvalue())
    else:
        width = max((len(r["name"]) for r in report.rows), default=0)
        for row in report.rows:
            line = f"{row['name']:<{width}}  {row['value']}"
            if "decimal" in row:
                line += f"  ({row['decimal']})"
            sys.stdout.write(line + "\n")
        sys.stderr.write(f"# runtime_ms {report.runtime_ms}\n")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.fn(args)
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except TheoremViolationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_THEOREM
    except (
        ParseError,
        NotATreeError,
        DisconnectedError,
        RouteRequiresTreeError,
        KemtreeError,
        ValueError,
        OSError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    report.runtime_ms = int((time.perf_counter() - start) * 1000)
    _emit(report, args)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
