"""Replays of the separator / intersection theorems over graph streams.

Sweeps work at the level of longest-path vertex sets: separator status and
intersection sizes depend only on the sets, which keeps dense graphs with
thousands of longest paths cheap.  Concrete witness paths are extracted only
for reports.  Every sweep is deterministic: stable graph order, stable
record order, seeded sampling.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .btrep import bt_from_paths
from .census import graph_stream
from .classify import OVERALL_ALL_LNC, OVERALL_TD, classify_bt
from .graphs import (
    Graph,
    emit_graph6,
    is_connected,
    is_separator,
    parse_graph6,
    popcount,
    vertex_connectivity,
    vertices_of,
)
from .longest_paths import (
    CapExceeded,
    all_longest_paths,
    extract_path,
    longest_path_vertex_sets,
    min_triple_intersection,
    path_states,
)
from .profiles import (
    TABLE_ELL4,
    TABLE_ELL5,
    canonical_form,
    class_for_case,
    enumerate_classes,
    expected_verdict,
)
from .btrep import bt_generic

DEFAULT_PAIR_CAP = 100_000
FILTER_SAMPLE_RATE = 0.01


@dataclass
class SweepReport:
    theorem: str
    graphs_scanned: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    violations_by_theorem: dict[str, int] = field(default_factory=dict)
    skipped: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def add_violation(self, kind: str, record: dict) -> None:
        self.counterexamples.append(record)
        self.violations_by_theorem[kind] = self.violations_by_theorem.get(kind, 0) + 1

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "theorem": self.theorem,
            "graphs_scanned": self.graphs_scanned,
            "counterexamples": self.counterexamples,
            "violations_by_theorem": dict(sorted(self.violations_by_theorem.items())),
            "skipped": self.skipped,
            "stats": dict(sorted(self.stats.items())),
        }
        if include_timing:
            payload["elapsed_seconds"] = round(self.elapsed, 3)
        return json.dumps(payload, indent=2, sort_keys=False)

    def merge(self, other: "SweepReport") -> None:
        self.graphs_scanned += other.graphs_scanned
        self.counterexamples.extend(other.counterexamples)
        self.skipped.extend(other.skipped)
        for k, v in other.violations_by_theorem.items():
            self.violations_by_theorem[k] = self.violations_by_theorem.get(k, 0) + v
        for k, v in other.stats.items():
            if not isinstance(v, (int, float)) or k not in self.stats:
                self.stats.setdefault(k, v)
            elif k.startswith("min_"):
                self.stats[k] = min(self.stats[k], v)
            else:
                self.stats[k] += v
        self.elapsed += other.elapsed

    def finalize(self) -> "SweepReport":
        self.counterexamples.sort(key=lambda r: (r.get("n", 0), r.get("graph6", "")))
        self.skipped.sort(key=lambda r: (r.get("n", 0), r.get("graph6", "")))
        return self


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("BITRACE_WORKERS", "1")))
    except ValueError:
        return 1


def _sharded(
    graphs: Iterable[Graph],
    per_graph: Callable[[Graph], SweepReport],
    theorem: str,
    workers: int | None = None,
) -> SweepReport:
    workers = worker_count() if workers is None else workers
    t0 = time.monotonic()
    total = SweepReport(theorem)
    graphs = list(graphs)
    if workers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(workers) as pool:
            partials = pool.map(per_graph, graphs, chunksize=64)
    else:
        partials = map(per_graph, graphs)
    for part in partials:
        total.merge(part)
    total.elapsed = time.monotonic() - t0
    return total.finalize()


def _set_pair_witness(g: Graph, m1: int, m2: int) -> dict:
    p = extract_path(g, m1)
    q = extract_path(g, m2)
    return {
        "p": list(p.vertices),
        "q": list(q.vertices),
        "intersection": sorted(vertices_of(m1 & m2)),
    }


# -- separator theorem ---------------------------------------------------------


def _separator_check_one(args: tuple[Graph, int]) -> SweepReport:
    g, ell_max = args
    rep = SweepReport("separator")
    rep.graphs_scanned = 1
    sets = longest_path_vertex_sets(g)
    for m1, m2 in itertools.combinations(sets, 2):
        inter = m1 & m2
        if inter == 0:
            raise AssertionError(
                "two longest paths of a connected graph must share a vertex"
            )
        if popcount(inter) > ell_max:
            continue
        if not is_separator(g, inter):
            record = {
                "n": g.n,
                "graph6": emit_graph6(g),
                "intersection_size": popcount(inter),
                **_set_pair_witness(g, m1, m2),
            }
            rep.add_violation("separator", record)
    return rep


def verify_separator_theorem(
    graphs: Iterable[Graph], ell_max: int = 5, workers: int | None = None
) -> SweepReport:
    """Every longest-path pair with distinct vertex sets and a small
    intersection must have a separating intersection.

    ell_max beyond 5 is exploratory: recorded non-separating pairs there are
    findings outside the proven range, not theorem violations.
    """
    items = [(g, ell_max) for g in graphs]
    report = _sharded(items, _separator_check_one, "separator", workers)
    report.stats.setdefault("ell_max", ell_max)
    return report


# -- Hippchen-style intersection bound ------------------------------------------


def _hippchen_check_one(args: tuple[Graph, int]) -> SweepReport:
    g, k = args
    rep = SweepReport("hippchen")
    rep.graphs_scanned = 1
    if g.n < 2 or min(g.degree(v) for v in range(g.n)) < k:
        rep.stats["below_connectivity"] = 1
        return rep
    # k = 1 only needs connectivity, not a cut computation
    if (is_connected(g) if k == 1 else vertex_connectivity(g) >= k) is False:
        rep.stats["below_connectivity"] = 1
        return rep
    rep.stats["k_connected"] = 1
    sets = longest_path_vertex_sets(g)
    path_order = popcount(sets[0])
    best = None
    for m1, m2 in itertools.combinations_with_replacement(sets, 2):
        size = popcount(m1 & m2)
        if best is None or size < best[0]:
            best = (size, m1, m2)
    assert best is not None
    rep.stats["min_intersection"] = best[0]
    if best[0] < min(k, path_order):
        rep.add_violation(
            "hippchen",
            {
                "n": g.n,
                "graph6": emit_graph6(g),
                "k": k,
                "min_intersection": best[0],
                **_set_pair_witness(g, best[1], best[2]),
            },
        )
    return rep


def verify_hippchen(
    graphs: Iterable[Graph], k: int, workers: int | None = None
) -> SweepReport:
    """Over k-connected graphs: two longest paths share at least
    min(k, |V(P)|) vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    items = [(g, k) for g in graphs]
    report = _sharded(items, _hippchen_check_one, "hippchen", workers)
    report.stats.setdefault("k", k)
    return report


# -- three longest paths ---------------------------------------------------------


def _three_paths_check_one(g: Graph) -> SweepReport:
    rep = SweepReport("three-paths")
    rep.graphs_scanned = 1
    sets = longest_path_vertex_sets(g)
    min_triple = None
    for trip in itertools.combinations_with_replacement(sets, 3):
        common = trip[0] & trip[1] & trip[2]
        size = popcount(common)
        if min_triple is None or size < min_triple:
            min_triple = size
        if size == 0:
            pairwise = [
                popcount(a & b) for a, b in itertools.combinations(trip, 2)
            ]
            if min(pairwise) < 6:
                rep.add_violation(
                    "three-paths",
                    {
                        "n": g.n,
                        "graph6": emit_graph6(g),
                        "pairwise": sorted(pairwise),
                        "paths": [
                            list(extract_path(g, m).vertices) for m in trip
                        ],
                    },
                )
    rep.stats["min_triple_intersection"] = min_triple
    rep.stats["conjecture1_holds"] = 1 if (min_triple or 0) >= 1 else 0
    return rep


def verify_three_paths(graphs: Iterable[Graph], workers: int | None = None) -> SweepReport:
    """No longest-path triple may combine empty common intersection with a
    pairwise intersection below six."""
    report = _sharded(list(graphs), _three_paths_check_one, "three-paths", workers)
    return report


# -- configuration tables ----------------------------------------------------------


EXPECTED_STRUCTURE = {
    # (ell, case) -> (top-level block count, embedded unit count, largest unit size)
    (4, 6): (1, 2, 6),
    (5, 9): (2, 0, 10),
    (5, 18): (1, 2, 8),
    (5, 19): (1, 3, 6),
    (5, 20): (1, 1, 10),
    (5, 22): (1, 1, 10),
}


def verify_tables(workers: int | None = None) -> SweepReport:
    """Regenerate the configuration tables and diff them against the
    embedded rows: orbits, verdicts, and known block structure."""
    t0 = time.monotonic()
    rep = SweepReport("tables")
    label_of = {"LNC": OVERALL_ALL_LNC, "TD": OVERALL_TD, "--": "exceptional"}
    for ell, table in ((4, TABLE_ELL4), (5, TABLE_ELL5)):
        classes = enumerate_classes(ell)
        rep.stats[f"classes_ell{ell}"] = len(classes)
        if len(classes) != len(table):
            rep.add_violation(
                "tables",
                {"ell": ell, "kind": "class_count", "got": len(classes), "want": len(table)},
            )
        for case, (perms, verdict) in sorted(table.items()):
            cc = class_for_case(ell, case)
            if cc.orbit != frozenset(perms):
                rep.add_violation(
                    "tables",
                    {
                        "ell": ell,
                        "case": case,
                        "kind": "orbit",
                        "got": sorted(cc.orbit),
                        "want": sorted(perms),
                    },
                )
            got = classify_bt(bt_generic(cc.canonical)).overall
            if got != label_of[verdict]:
                rep.add_violation(
                    "tables",
                    {"ell": ell, "case": case, "kind": "verdict", "got": got, "want": verdict},
                )
            if (ell, case) in EXPECTED_STRUCTURE:
                tree = bt_generic(cc.canonical).block_tree
                top_ids = {b.block_id for b in tree.blocks}
                embedded = sum(
                    1 for b in tree.all_blocks() if b.block_id not in top_ids
                )
                largest = max(len(b.esu.keys) for b in tree.all_blocks())
                got_struct = (len(tree.blocks), embedded, largest)
                if got_struct != EXPECTED_STRUCTURE[(ell, case)]:
                    rep.add_violation(
                        "tables",
                        {
                            "ell": ell,
                            "case": case,
                            "kind": "structure",
                            "got": list(got_struct),
                            "want": list(EXPECTED_STRUCTURE[(ell, case)]),
                        },
                    )
    # the two three-point configurations are concatenations of local units
    for cc in enumerate_classes(3):
        got = classify_bt(bt_generic(cc.canonical)).overall
        if got != OVERALL_ALL_LNC:
            rep.add_violation(
                "tables", {"ell": 3, "kind": "verdict", "sigma": cc.canonical, "got": got}
            )
    rep.graphs_scanned = len(TABLE_ELL4) + len(TABLE_ELL5) + 2
    rep.elapsed = time.monotonic() - t0
    return rep.finalize()


# -- counterexample search ------------------------------------------------------


_CLASSIFY_CACHE: dict[tuple, str] = {}


def _classify_pair_overall(rep_key: tuple, rep) -> str:
    got = _CLASSIFY_CACHE.get(rep_key)
    if got is None:
        got = classify_bt(rep).overall
        _CLASSIFY_CACHE[rep_key] = got
    return got


def _search_one(args: tuple[Graph, str, int, int]) -> SweepReport:
    g, target, k_or_bound, pair_cap = args
    rep = SweepReport("search")
    rep.graphs_scanned = 1
    g6 = emit_graph6(g)
    if target == "conjecture2":
        k = k_or_bound
        if g.n < 2 or min(g.degree(v) for v in range(g.n)) < k or vertex_connectivity(g) < k:
            rep.stats["filtered_connectivity"] = 1
            return rep
    sets = longest_path_vertex_sets(g)
    if len(sets) == 1:
        rep.stats["single_vertex_set"] = 1
        return rep
    try:
        paths = all_longest_paths(g, cap=pair_cap)
    except CapExceeded:
        rep.skipped.append({"n": g.n, "graph6": g6, "reason": "path_cap"})
        rep.stats["capped"] = 1
        return rep
    safe = True
    for p, q in itertools.combinations(paths, 2):
        if not (p.vertex_set & q.vertex_set):
            raise AssertionError("longest paths of a connected graph must meet")
        btp = bt_from_paths(g, p, q, validate=False)
        if btp.ell > 6:
            safe = False
            break
        key = (btp.p_vertices, btp.q_vertices)
        if _classify_pair_overall(key, btp) not in (OVERALL_ALL_LNC, OVERALL_TD):
            safe = False
            break
    if safe:
        rep.stats["filtered_safe"] = 1
        rep.skipped.append({"n": g.n, "graph6": g6, "reason": "all_pairs_safe"})
        return rep
    rep.stats["survivors"] = 1
    if target == "conjecture1":
        size, witness = min_triple_intersection(g)
        if size == 0:
            rep.add_violation(
                "conjecture1",
                {
                    "n": g.n,
                    "graph6": g6,
                    "paths": [list(w.vertices) for w in witness],
                },
            )
    else:
        k = k_or_bound
        best = None
        for m1, m2 in itertools.combinations_with_replacement(sets, 2):
            size = popcount(m1 & m2)
            if best is None or size < best[0]:
                best = (size, m1, m2)
        assert best is not None
        if best[0] < min(k, popcount(sets[0])):
            rep.add_violation(
                "conjecture2",
                {"n": g.n, "graph6": g6, "k": k, "min_intersection": best[0]},
            )
    return rep


def search_counterexample(
    graphs: Iterable[Graph],
    target: str,
    k_or_bound: int = 0,
    pair_cap: int = 200,
    sample_rate: float = FILTER_SAMPLE_RATE,
    seed: int = 0,
    workers: int | None = None,
) -> SweepReport:
    """Classification-filtered hunt for counterexamples.

    Graphs whose every longest-path pair classifies as all-LNC or TD cannot
    host three disjoint longest paths, so they are skipped; a seeded sample
    of the skipped graphs is re-checked in full to catch filter bugs.
    """
    if target not in ("conjecture1", "conjecture2"):
        raise ValueError("target must be conjecture1 or conjecture2")
    items = [(g, target, k_or_bound, pair_cap) for g in graphs]
    report = _sharded(items, _search_one, "search", workers)
    report.stats.setdefault("survivors", 0)
    report.stats.setdefault("filtered_safe", 0)

    rng = random.Random(seed)
    sampled = 0
    for rec in report.skipped:
        if rec.get("reason") != "all_pairs_safe":
            continue
        if rng.random() >= sample_rate:
            continue
        sampled += 1
        g = parse_graph6(rec["graph6"])
        size, witness = min_triple_intersection(g)
        if size < 1:
            report.add_violation(
                "filter_unsound",
                {
                    "n": g.n,
                    "graph6": rec["graph6"],
                    "paths": [list(w.vertices) for w in witness],
                },
            )
    report.stats["filter_samples_rechecked"] = sampled
    return report.finalize()


# -- convenience streams -----------------------------------------------------------


def census_stream(n_max: int, n_min: int = 2) -> Iterator[Graph]:
    return graph_stream(n_min, n_max)
