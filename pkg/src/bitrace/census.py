"""Isomorph-free enumeration of small connected graphs.

Canonical keys come from iterated color refinement followed by a branching
search for the lexicographically smallest (color, adjacency-to-prefix) code.
Candidates at each step are restricted to those minimizing the next code
element, with twin vertices collapsed, so the branching stays tiny for the
graph sizes we sweep (n <= 9).

Enumeration augments each connected (n-1)-vertex graph by one vertex joined
to every nonempty neighbor subset; every connected n-vertex graph arises
this way because it has a non-cut vertex.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graphs import Graph, popcount, vertices_of

CENSUS_MAX_N = 9


def _refined_colors(g: Graph) -> tuple[int, ...]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in vertices_of(g.adj[v]))))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def canonical_key(g: Graph) -> tuple[tuple[int, int], ...]:
    """Isomorphism-invariant code: lexicographically minimal placement trace."""
    if g.n == 0:
        return ()
    colors = _refined_colors(g)
    best: list[tuple[int, int]] | None = None

    def twin_reduce(cands: list[int], placed_mask: int) -> list[int]:
        kept: list[int] = []
        for v in cands:
            dup = False
            for w in kept:
                # swapping v,w is an automorphism when their neighborhoods
                # agree away from each other
                if (g.adj[v] & ~(1 << w)) == (g.adj[w] & ~(1 << v)):
                    dup = True
                    break
            if not dup:
                kept.append(v)
        return kept

    def place(order: list[int], placed_mask: int, code: list[tuple[int, int]]):
        nonlocal best
        if best is not None and code > best[: len(code)]:
            return
        if len(order) == g.n:
            if best is None or code < best:
                best = list(code)
            return
        options: list[tuple[tuple[int, int], int]] = []
        for v in range(g.n):
            if placed_mask & (1 << v):
                continue
            bits = 0
            for i, u in enumerate(order):
                if g.adj[v] & (1 << u):
                    bits |= 1 << i
            options.append(((colors[v], bits), v))
        # prefer already-attached vertices so partial codes compare fairly,
        # then smaller color / adjacency pattern
        key_min = min(k for k, _ in options)
        cands = [v for k, v in options if k == key_min]
        for v in twin_reduce(cands, placed_mask):
            place(order + [v], placed_mask | (1 << v), code + [key_min])

    place([], 0, [])
    assert best is not None
    return tuple(best)


def canonical_graph(g: Graph) -> Graph:
    """A canonical representative: rebuild the graph from its own key."""
    key = canonical_key(g)
    edges = []
    for j, (_, bits) in enumerate(key):
        for i in vertices_of(bits):
            edges.append((i, j))
    return Graph.from_edges(g.n, edges)


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, []),)
    out: dict[tuple, Graph] = {}
    for base in _census(n - 1):
        for subset in range(1, 1 << (n - 1)):
            edges = base.edges() + [(u, n - 1) for u in vertices_of(subset)]
            g = Graph.from_edges(n, edges)
            key = canonical_key(g)
            if key not in out:
                out[key] = canonical_graph(g)
    return tuple(out[k] for k in sorted(out))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected simple graph on n vertices, once up to isomorphism."""
    if not 2 <= n <= CENSUS_MAX_N:
        raise ValueError(f"internal enumerator handles 2 <= n <= {CENSUS_MAX_N}")
    return iter(_census(n))


def connected_graph_count(n: int) -> int:
    return len(_census(n))


def graph_stream(n_min: int, n_max: int) -> Iterator[Graph]:
    """Concatenated census for n_min..n_max, smallest graphs first."""
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)
