"""Simple graphs and two-colored multigraphs over dense small vertex ids.

Vertices are integers 0..n-1.  Adjacency is kept as one bitmask row per
vertex, which keeps the backtracking searches elsewhere in the package
cache-friendly.  Vertex sets are plain int bitmasks; ``mask_of`` /
``vertices_of`` convert at API boundaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

COLOR_P = "P"
COLOR_Q = "Q"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _as_mask(s: int | Iterable[int]) -> int:
    return s if isinstance(s, int) else mask_of(s)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph: no loops, no parallel edges."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency rows must match vertex count")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"row {v} references vertices >= n")
            if row & (1 << v):
                raise ValueError(f"self-loop at {v}")
            for u in vertices_of(row):
                if not self.adj[u] & (1 << v):
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in vertices_of(self.adj[u])
            if u < v
        ]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def with_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """New graph with vertex v renamed to perm[v]."""
        if isinstance(perm, dict):
            perm = [perm[v] for v in range(self.n)]
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as masks) of the subgraph induced on ``within``."""
    remaining = g.full_mask if within is None else within
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in vertices_of(frontier):
                nxt |= g.adj[v] & remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    """True iff g has at most one connected component (empty graph counts)."""
    return len(components(g)) <= 1


def is_separator(g: Graph, s: int | Iterable[int]) -> bool:
    """True iff removing the vertex set s (with incident edges) disconnects g."""
    smask = _as_mask(s)
    if smask & ~g.full_mask:
        raise ValueError("separator candidate contains vertices outside the graph")
    rest = g.full_mask & ~smask
    if rest == 0:
        raise ValueError("cannot test a separator with empty complement")
    return len(components(g, rest)) >= 2


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Menger count via unit-capacity max flow on the vertex-split digraph."""
    # node 2v = v_in, 2v+1 = v_out; arc v_in->v_out has capacity 1 except s,t
    n2 = 2 * g.n
    cap: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else g.n
    for u, v in g.edges():
        cap[(2 * u + 1, 2 * v)] = g.n
        cap[(2 * v + 1, 2 * u)] = g.n
    out: list[list[int]] = [[] for _ in range(n2)]
    for a, b in cap:
        out[a].append(b)
        out[b].append(a)  # residual arc
    flow = 0
    while True:
        # BFS for an augmenting path in the residual network
        prev = {2 * s + 1: -1}
        queue = [2 * s + 1]
        while queue and 2 * t not in prev:
            node = queue.pop(0)
            for nb in out[node]:
                if nb in prev:
                    continue
                if cap.get((node, nb), 0) > 0:
                    prev[nb] = node
                    queue.append(nb)
        if 2 * t not in prev:
            return flow
        node = 2 * t
        while prev[node] != -1:
            p = prev[node]
            cap[(p, node)] = cap.get((p, node), 0) - 1
            cap[(node, p)] = cap.get((node, p), 0) + 1
            node = p
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that g is k-connected; disconnected graphs give 0."""
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0
    best = g.n - 1  # complete graph
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            best = min(best, _max_vertex_disjoint_paths(g, u, v))
    return best


# -- graph6 (short form, n <= 62) ------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line (6-bit upper-triangle packing)."""
    s = line.strip()
    if not s:
        raise ValueError("empty graph6 line")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise ValueError(f"graph6 character {ch!r} out of range")
        vals.append(o - 63)
    n = vals[0]
    if n == 63:
        raise ValueError("long-form graph6 (n > 62) is not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - 1 != need:
        raise ValueError(f"graph6 payload has {len(vals) - 1} groups, expected {need}")
    bits = []
    for v in vals[1:]:
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise ValueError("nonzero padding bits in graph6 payload")
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("short-form graph6 handles n <= 62 only")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


# -- adjacency-list JSON -----------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(obj: dict) -> Graph:
    return Graph.from_edges(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


# -- two-colored multigraph ---------------------------------------------------


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph whose edges carry one of two colors, multiplicity at most 2.

    A parallel pair must consist of one edge of each color (a shared edge of
    the two paths, kept once per color).
    """

    n: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        seen: dict[tuple[int, int], list[str]] = {}
        norm = []
        for u, v, c in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if c not in (COLOR_P, COLOR_Q):
                raise ValueError(f"unknown edge color {c!r}")
            key = (min(u, v), max(u, v))
            seen.setdefault(key, []).append(c)
            norm.append((key[0], key[1], c))
        for key, colors in seen.items():
            if len(colors) > 2:
                raise ValueError(f"edge {key} has multiplicity {len(colors)}")
            if len(colors) == 2 and colors[0] == colors[1]:
                raise ValueError(f"parallel edges at {key} must differ in color")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_colored_edges(
        cls, n: int, edges: Iterable[tuple[int, int, str]]
    ) -> "MultiGraph":
        return cls(n, tuple(edges))

    def underlying(self) -> Graph:
        return Graph.from_edges(self.n, [(u, v) for u, v, _ in set(self.edges)])

    def color_degree(self, v: int, color: str) -> int:
        return sum(1 for u, w, c in self.edges if c == color and v in (u, w))

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return sum(1 for a, b, _ in self.edges if (a, b) == key)

    def edges_of_color(self, color: str) -> list[tuple[int, int]]:
        return [(u, v) for u, v, c in self.edges if c == color]


_DOT_COLORS = {COLOR_P: "green", COLOR_Q: "red"}


def emit_dot(
    g: Graph | MultiGraph,
    highlight: int | Iterable[int] | None = None,
    name: str = "g",
) -> str:
    """Render as DOT text; multigraph edges carry their path color."""
    hmask = 0 if highlight is None else _as_mask(highlight)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = ' [style=filled, fillcolor=gold]' if hmask & (1 << v) else ""
        lines.append(f"  {v}{attrs};")
    if isinstance(g, MultiGraph):
        for u, v, c in g.edges:
            lines.append(f'  {u} -- {v} [color={_DOT_COLORS[c]}];')
    else:
        for u, v in g.edges():
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
