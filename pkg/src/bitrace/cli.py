"""Command-line front end.

Subcommands: classes, inspect, classify, verify, search.  Graph input is a
graph6 file, an adjacency-list JSON file, "-" for graph6 on stdin, or the
name of a built-in fixture.  Exit codes: 0 pass, 1 violation found, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .btrep import GenericLengths, bt_from_paths, bt_generic
from .census import graph_stream
from .classify import classify_bt
from .fixtures import FIXTURES, load_fixture
from .graphs import (
    Graph,
    emit_dot,
    emit_graph6,
    graph_from_json,
    is_separator,
    mask_of,
    parse_graph6,
)
from .harness import (
    search_counterexample,
    verify_hippchen,
    verify_separator_theorem,
    verify_tables,
    verify_three_paths,
)
from .longest_paths import (
    CapExceeded,
    all_longest_paths,
    longest_path_length,
    longest_path_pairs,
)
from .profiles import CLASS_ELL_MAX, enumerate_classes, intersection_profile

USAGE_ERROR = 2


def _load_graphs(source: str) -> list[Graph]:
    if source in FIXTURES:
        return [load_fixture(source).graph]
    if source == "-":
        lines = sys.stdin.read().splitlines()
        return [parse_graph6(line) for line in lines if line.strip()]
    if source.endswith(".json"):
        with open(source) as fh:
            payload = json.load(fh)
        if isinstance(payload, list):
            return [graph_from_json(obj) for obj in payload]
        return [graph_from_json(payload)]
    with open(source) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def _graph_source(args) -> Iterable[Graph]:
    if getattr(args, "source", None):
        return _load_graphs(args.source)
    n_max = getattr(args, "n_max", None)
    if n_max is None:
        raise SystemExit("either --source or --n-max is required")
    return graph_stream(2, n_max)


def cmd_classes(args) -> int:
    classes = enumerate_classes(args.ell)
    if args.json:
        payload = [
            {
                "canonical": list(c.canonical),
                "orbit": sorted(list(p) for p in c.orbit),
                "orbit_size": len(c.orbit),
                "case": c.paper_case,
                "verdict": c.verdict_label,
            }
            for c in classes
        ]
        print(json.dumps(payload, indent=2))
        return 0
    print(f"ell={args.ell}: {len(classes)} configuration classes")
    for i, c in enumerate(classes, 1):
        case = f"case {c.paper_case}" if c.paper_case else "-"
        verdict = c.verdict_label or "-"
        print(
            f"{i:3d}. canonical={c.canonical} orbit_size={len(c.orbit)} "
            f"{case:8s} {verdict}"
        )
    return 0


def cmd_inspect(args) -> int:
    graphs = _load_graphs(args.input)
    out: list[dict] = []
    for g in graphs:
        record: dict = {"graph6": emit_graph6(g), "n": g.n}
        record["longest_path_length"] = longest_path_length(g)
        try:
            paths = all_longest_paths(g, cap=args.cap)
            record["longest_paths"] = [list(p.vertices) for p in paths]
        except CapExceeded:
            record["longest_paths"] = "capped"
            out.append(record)
            continue
        pair_info = []
        try:
            pairs = longest_path_pairs(g, require_distinct_vertex_sets=True, cap=args.cap)
        except CapExceeded:
            pairs = None
            record["pairs"] = "capped"
        if pairs is not None:
            for pp in pairs:
                prof = intersection_profile(pp.p, pp.q)
                entry = {
                    "p": list(pp.p.vertices),
                    "q": list(pp.q.vertices),
                    "ell": prof.ell,
                    "sigma": list(prof.sigma),
                    "separates": is_separator(g, mask_of(pp.intersection)),
                }
                if args.classify and prof.ell <= 6:
                    rep = bt_from_paths(g, pp.p, pp.q, validate=False)
                    entry["verdict"] = classify_bt(rep).overall
                pair_info.append(entry)
            record["pairs"] = pair_info
        out.append(record)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for record in out:
            print(f"graph {record['graph6']} n={record['n']} L={record['longest_path_length']}")
            lp = record["longest_paths"]
            print(f"  longest paths: {lp if isinstance(lp, str) else len(lp)}")
            if isinstance(record.get("pairs"), list):
                for entry in record["pairs"]:
                    extra = f" verdict={entry['verdict']}" if "verdict" in entry else ""
                    print(
                        f"  pair ell={entry['ell']} sigma={tuple(entry['sigma'])} "
                        f"separates={entry['separates']}{extra}"
                    )
    if args.dot:
        with open(args.dot, "w") as fh:
            for g in graphs:
                fh.write(emit_dot(g))
    return 0


def _parse_sigma(text: str) -> tuple[int, ...]:
    try:
        sigma = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise SystemExit(f"cannot parse permutation {text!r}")
    return sigma


def cmd_classify(args) -> int:
    if args.sigma:
        sigma = _parse_sigma(args.sigma)
        lengths = GenericLengths(*args.lengths) if args.lengths else None
        rep = bt_generic(sigma, lengths)
        verdict = classify_bt(rep)
        payload = {
            "sigma": list(sigma),
            "case": verdict.paper_case,
            "overall": verdict.overall,
            "pairs": {
                f"{a[0]}{a[1]}~{b[0]}{b[1]}": v.status
                for (a, b), v in sorted(verdict.per_pair.items())
            },
        }
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(emit_dot(rep.host, highlight=rep.intersection_mask))
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print(f"sigma={sigma} case={verdict.paper_case} overall={verdict.overall}")
            for pair, status in payload["pairs"].items():
                print(f"  {pair}: {status}")
        return 0
    graphs = _load_graphs(args.input)
    results = []
    for g in graphs:
        pairs = longest_path_pairs(g, require_distinct_vertex_sets=False, cap=args.cap)
        for pp in pairs:
            if pp.p == pp.q:
                continue
            rep = bt_from_paths(g, pp.p, pp.q, validate=False)
            if rep.ell > 6:
                results.append({"graph6": emit_graph6(g), "ell": rep.ell, "overall": "out_of_range"})
                continue
            verdict = classify_bt(rep)
            results.append(
                {
                    "graph6": emit_graph6(g),
                    "ell": rep.ell,
                    "sigma": list(rep.profile.sigma),
                    "overall": verdict.overall,
                }
            )
    print(json.dumps(results, indent=2) if args.json else "\n".join(
        f"{r['graph6']} ell={r['ell']} overall={r['overall']}" for r in results
    ))
    return 0


def cmd_verify(args) -> int:
    if args.theorem == "tables":
        report = verify_tables()
    elif args.theorem == "separator":
        report = verify_separator_theorem(_graph_source(args), ell_max=args.ell_max)
    elif args.theorem == "hippchen":
        report = verify_hippchen(_graph_source(args), k=args.k)
    elif args.theorem == "three-paths":
        report = verify_three_paths(_graph_source(args))
    else:
        raise SystemExit(f"unknown theorem selector {args.theorem!r}")
    print(report.to_json(include_timing=args.timing))
    return 0 if report.ok else 1


def cmd_search(args) -> int:
    report = search_counterexample(
        _graph_source(args),
        target=args.target,
        k_or_bound=args.k,
        pair_cap=args.cap,
        sample_rate=args.sample_rate,
        seed=args.seed,
    )
    print(report.to_json(include_timing=args.timing))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitrace",
        description="Longest-path intersection toolkit: configuration tables, "
        "pair classification, and exhaustive small-graph verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="configuration classes for a given intersection size")
    p.add_argument("ell", type=int, choices=range(1, CLASS_ELL_MAX + 1))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("inspect", help="longest paths, pairs and verdicts of a graph")
    p.add_argument("input", help="graph6 file, JSON file, '-' for stdin, or fixture name")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="FILE", help="write DOT output")
    p.add_argument("--classify", action="store_true", help="classify each pair")
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(fn=cmd_inspect)

    p = sub.add_parser("classify", help="classify a generic configuration or a graph's pairs")
    p.add_argument("input", nargs="?", help="graph input (omit when using --sigma)")
    p.add_argument("--sigma", help="permutation, e.g. 2,4,1,3")
    p.add_argument(
        "--lengths",
        type=lambda s: tuple(int(x) for x in s.split(",")),
        help="internal,extremal component lengths (default 2,1)",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="replay a theorem over a graph stream")
    p.add_argument("theorem", choices=["separator", "hippchen", "three-paths", "tables"])
    p.add_argument("--n-max", type=int, help="sweep the census up to this order")
    p.add_argument("--source", help="graph6/JSON file, '-' or fixture name")
    p.add_argument("--ell-max", type=int, default=5)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="filtered counterexample hunt")
    p.add_argument("target", choices=["conjecture1", "conjecture2"])
    p.add_argument("--n-max", type=int)
    p.add_argument("--source")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--cap", type=int, default=200)
    p.add_argument("--sample-rate", type=float, default=0.01)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and not args.sigma and not args.input:
        parser.error("classify needs a graph input or --sigma")
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
