"""Exact longest-path computation and enumeration for small graphs.

The workhorse is a reachable-state table over (visited-mask, last-vertex)
pairs.  For the graph sizes handled here (n <= 16 for search) the table is
small, deterministic, and doubles as the oracle for which vertex sets carry
a longest path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graphs import Graph, is_connected, mask_of, popcount, vertices_of

DEFAULT_CAP = 100_000


class CapExceeded(Exception):
    """An enumeration grew past its configured cap; distinct from success."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap {cap}")
        self.what = what
        self.cap = cap


@dataclass(frozen=True)
class Path:
    """Simple path as an ordered vertex tuple, canonically oriented."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) != len(set(vs)):
            raise ValueError("path repeats a vertex")
        if not vs:
            raise ValueError("empty path")
        if vs[0] > vs[-1]:
            vs = vs[::-1]
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges())


@dataclass(frozen=True)
class PathPair:
    p: Path
    q: Path
    intersection: frozenset[int]
    same_vertex_set: bool


def path_states(g: Graph, within: int | None = None) -> dict[int, int]:
    """Map visited-mask -> bitmask of possible last vertices of simple paths.

    Only masks inducing at least one simple path appear; singletons included.
    """
    allowed = g.full_mask if within is None else within
    states: dict[int, int] = {}
    frontier: list[tuple[int, int]] = []
    for v in vertices_of(allowed):
        states[1 << v] = states.get(1 << v, 0) | (1 << v)
        frontier.append((1 << v, v))
    while frontier:
        mask, last = frontier.pop()
        for nxt in vertices_of(g.adj[last] & allowed & ~mask):
            nmask = mask | (1 << nxt)
            lasts = states.get(nmask, 0)
            if not lasts & (1 << nxt):
                states[nmask] = lasts | (1 << nxt)
                frontier.append((nmask, nxt))
    return states


def longest_path_length(g: Graph) -> int:
    """Exact maximum edge count over simple paths; rejects disconnected input."""
    if g.n == 0:
        raise ValueError("empty graph has no paths")
    if not is_connected(g):
        raise ValueError("longest path length is defined on connected graphs here")
    return max(popcount(m) for m in path_states(g)) - 1


def longest_path_vertex_sets(g: Graph) -> list[int]:
    """Masks of vertex sets carrying at least one longest path, sorted."""
    states = path_states(g)
    best = max(popcount(m) for m in states)
    return sorted(m for m in states if popcount(m) == best)


def extract_path(g: Graph, mask: int) -> Path:
    """Lexicographically smallest vertex order tracing a spanning path of mask."""
    verts = vertices_of(mask)
    dead: set[tuple[int, int]] = set()

    def go(seq: list[int], visited: int) -> list[int] | None:
        if visited == mask:
            return seq
        last = seq[-1]
        if (visited, last) in dead:
            return None
        for nxt in vertices_of(g.adj[last] & mask & ~visited):
            res = go(seq + [nxt], visited | (1 << nxt))
            if res is not None:
                return res
        dead.add((visited, last))
        return None

    for start in verts:
        res = go([start], 1 << start)
        if res is not None:
            return Path(tuple(res))
    raise ValueError("mask does not carry a spanning path")


def all_longest_paths(g: Graph, cap: int = DEFAULT_CAP) -> list[Path]:
    """Every longest path exactly once up to reversal, lexicographic order."""
    target = longest_path_length(g)
    ext_memo: dict[tuple[int, int], int] = {}

    def ext(mask: int, last: int) -> int:
        key = (mask, last)
        if key not in ext_memo:
            nbrs = vertices_of(g.adj[last] & ~mask)
            ext_memo[key] = (
                0 if not nbrs else 1 + max(ext(mask | (1 << v), v) for v in nbrs)
            )
        return ext_memo[key]

    out: list[Path] = []

    def walk(seq: list[int], visited: int):
        if len(seq) - 1 == target:
            if seq[0] < seq[-1]:
                out.append(Path(tuple(seq)))
                if len(out) > cap:
                    raise CapExceeded("longest paths", cap)
            return
        last = seq[-1]
        for nxt in vertices_of(g.adj[last] & ~visited):
            if len(seq) + ext(visited | (1 << nxt), nxt) >= target:
                walk(seq + [nxt], visited | (1 << nxt))

    for start in range(g.n):
        if ext(1 << start, start) == target:
            walk([start], 1 << start)
    return out


def longest_path_pairs(
    g: Graph,
    require_distinct_vertex_sets: bool = False,
    cap: int = DEFAULT_CAP,
) -> list[PathPair]:
    """All unordered pairs of longest paths with intersection metadata."""
    paths = all_longest_paths(g, cap=cap)
    connected = is_connected(g)
    pairs: list[PathPair] = []
    for i, p in enumerate(paths):
        for q in paths[i if not require_distinct_vertex_sets else i + 1 :]:
            if require_distinct_vertex_sets and p.vertex_set == q.vertex_set:
                continue
            inter = p.vertex_set & q.vertex_set
            if connected and not inter:
                raise AssertionError(
                    "two longest paths of a connected graph must intersect; "
                    "empty intersection indicates an engine bug"
                )
            pairs.append(PathPair(p, q, inter, p.vertex_set == q.vertex_set))
            if len(pairs) > cap:
                raise CapExceeded("longest-path pairs", cap)
    return pairs


def min_triple_intersection(
    g: Graph, cap: int = DEFAULT_CAP
) -> tuple[int, tuple[Path, Path, Path]]:
    """Minimum |V(P) ∩ V(Q) ∩ V(R)| over longest-path triples, with witness.

    Repetition is allowed, so the answer only depends on the distinct vertex
    sets of longest paths.  A positive minimum means every three longest paths
    of g share a vertex.
    """
    sets = longest_path_vertex_sets(g)
    best: tuple[int, tuple[int, int, int]] | None = None
    count = 0
    for trip in itertools.combinations_with_replacement(sets, 3):
        count += 1
        if count > cap:
            raise CapExceeded("longest-path triples", cap)
        size = popcount(trip[0] & trip[1] & trip[2])
        if best is None or size < best[0]:
            best = (size, trip)
            if size == 0:
                break
    assert best is not None
    witness = tuple(extract_path(g, m) for m in best[1])
    return best[0], witness  # type: ignore[return-value]


# -- decision-style searches used by the bi-traceable oracles ----------------


def has_path_of_length(g: Graph, threshold: int, within: int | None = None) -> bool:
    """True iff some simple path has at least ``threshold`` edges.

    DFS with a reachability bound; exits early on success, so it is cheap
    exactly when the answer is yes.
    """
    allowed = g.full_mask if within is None else within

    def reach_count(frm: int, visited: int) -> int:
        comp = 0
        frontier = frm
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= g.adj[v] & allowed & ~visited & ~comp
            comp |= nxt
            frontier = nxt
        return popcount(comp)

    def dfs(last: int, visited: int, length: int) -> bool:
        if length >= threshold:
            return True
        if length + reach_count(1 << last, visited) < threshold:
            return False
        for nxt in vertices_of(g.adj[last] & allowed & ~visited):
            if dfs(nxt, visited | (1 << nxt), length + 1):
                return True
        return False

    if threshold <= 0:
        return bool(allowed)
    return any(dfs(v, 1 << v, 0) for v in vertices_of(allowed))


def longest_path_length_dfs(g: Graph, within: int | None = None) -> int:
    """Exact longest path length by pruned DFS (no connectivity requirement)."""
    allowed = g.full_mask if within is None else within
    if not allowed:
        raise ValueError("empty vertex set")
    best = 0

    def reach_count(frm: int, visited: int) -> int:
        comp = 0
        frontier = frm
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= g.adj[v] & allowed & ~visited & ~comp
            comp |= nxt
            frontier = nxt
        return popcount(comp)

    def dfs(last: int, visited: int, length: int):
        nonlocal best
        best = max(best, length)
        if length + reach_count(1 << last, visited) <= best:
            return
        for nxt in vertices_of(g.adj[last] & allowed & ~visited):
            dfs(nxt, visited | (1 << nxt), length + 1)

    for v in vertices_of(allowed):
        dfs(v, 1 << v, 0)
    return best


def has_cycle_of_length_at_least(
    g: Graph, threshold: int, parallel_pairs: Iterable[tuple[int, int]] = ()
) -> bool:
    """True iff the (multi)graph has a cycle with >= threshold edges.

    ``parallel_pairs`` are vertex pairs joined by two parallel edges; each
    such pair is a 2-cycle and extends any simple u-v path to a cycle.
    """
    pp = {(min(u, v), max(u, v)) for u, v in parallel_pairs}
    if threshold <= 2 and pp:
        return True

    def dfs(start: int, last: int, visited: int, length: int) -> bool:
        if length >= threshold - 1 and g.adj[last] & (1 << start) and length >= 2:
            return True
        if (
            length >= threshold - 1
            and (min(start, last), max(start, last)) in pp
        ):
            return True
        for nxt in vertices_of(g.adj[last] & ~visited):
            if nxt < start:  # canonical root: smallest vertex on the cycle
                continue
            if dfs(start, nxt, visited | (1 << nxt), length + 1):
                return True
        return False

    return any(dfs(v, v, 1 << v, 0) for v in range(g.n))
