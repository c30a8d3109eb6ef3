"""Two-colored representations of the union of two equal-length paths.

A representation keeps both traversals, the completed components between
consecutive shared vertices, and the reduced components obtained by deleting
the shared vertices.  Construction either extracts the structure from two
concrete paths in a host graph, or realizes a permutation generically with
chosen component lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .graphs import COLOR_P, COLOR_Q, Graph, MultiGraph, mask_of
from .longest_paths import Path, has_path_of_length
from .profiles import IntersectionProfile, Perm

CompKey = tuple[str, int]


class InvalidBtRep(ValueError):
    """The requested structure cannot be a union of two longest paths."""


@dataclass(frozen=True)
class GenericLengths:
    """Uniform component lengths for generic realizations.

    One interior vertex per completed component (internal 2, extremal 1) is
    the smallest instantiation that leaves every pair-connection question
    visible; (3, 2) is the robustness alternative.
    """

    internal: int = 2
    extremal: int = 1

    def resolve(self, ell: int) -> dict[CompKey, int]:
        out: dict[CompKey, int] = {}
        for color in (COLOR_P, COLOR_Q):
            for i in range(ell + 1):
                out[(color, i)] = (
                    self.extremal if i in (0, ell) else self.internal
                )
        return out


@dataclass(frozen=True)
class BtRep:
    n: int
    p_vertices: tuple[int, ...]
    q_vertices: tuple[int, ...]
    profile: IntersectionProfile
    host: MultiGraph
    completed: dict[CompKey, tuple[int, ...]]
    orig_vertex: tuple[int, ...] | None = None

    @property
    def ell(self) -> int:
        return self.profile.ell

    @property
    def length(self) -> int:
        return len(self.p_vertices) - 1

    @cached_property
    def intersection_mask(self) -> int:
        return mask_of(self.profile.a_seq)

    @cached_property
    def underlying(self) -> Graph:
        return self.host.underlying()

    @cached_property
    def reduced(self) -> dict[CompKey, tuple[int, ...]]:
        inter = set(self.profile.a_seq)
        return {
            key: tuple(v for v in verts if v not in inter)
            for key, verts in self.completed.items()
        }

    @cached_property
    def block_tree(self):
        from .blocks import block_decomposition

        return block_decomposition(self)

    @cached_property
    def parallel_pairs(self) -> tuple[tuple[int, int], ...]:
        seen: dict[tuple[int, int], int] = {}
        for u, v, _ in self.host.edges:
            seen[(u, v)] = seen.get((u, v), 0) + 1
        return tuple(k for k, m in seen.items() if m == 2)

    def component_keys(self, nonempty_only: bool = False) -> list[CompKey]:
        keys = sorted(self.completed, key=lambda k: (k[0], k[1]))
        if nonempty_only:
            keys = [k for k in keys if self.reduced[k]]
        return keys

    def component_edges(self, key: CompKey) -> list[tuple[int, int, str]]:
        verts = self.completed[key]
        return [(u, v, key[0]) for u, v in zip(verts, verts[1:])]

    def component_length(self, key: CompKey) -> int:
        return len(self.completed[key]) - 1

    def is_extremal(self, key: CompKey) -> bool:
        return key[1] in (0, self.ell)

    def components_adjacent(self, a: CompKey, b: CompKey) -> bool:
        return bool(set(self.completed[a]) & set(self.completed[b]))

    def validate(self) -> None:
        p, q = self.p_vertices, self.q_vertices
        if len(p) != len(q):
            raise InvalidBtRep("the two traversals differ in length")
        # every shared vertex carries two edges of each color unless it ends a path
        for v in self.profile.a_seq:
            for color, path in ((COLOR_P, p), (COLOR_Q, q)):
                expect = 2
                if v in (path[0], path[-1]):
                    expect = 1 if len(path) > 1 else 0
                if self.host.color_degree(v, color) != expect:
                    raise InvalidBtRep(
                        f"shared vertex {v} has color-{color} degree "
                        f"{self.host.color_degree(v, color)}, expected {expect}"
                    )
        if has_path_of_length(self.underlying, self.length + 1):
            raise InvalidBtRep(
                "the union admits a path longer than the two defining paths"
            )


def _split_completed(
    vertices: tuple[int, ...], order: tuple[int, ...], color: str
) -> dict[CompKey, tuple[int, ...]]:
    """Cut one traversal at the shared vertices, in traversal order."""
    marks = [i for i, v in enumerate(vertices) if v in set(order)]
    comps: dict[CompKey, tuple[int, ...]] = {}
    comps[(color, 0)] = vertices[: marks[0] + 1]
    for idx in range(len(marks) - 1):
        comps[(color, idx + 1)] = vertices[marks[idx] : marks[idx + 1] + 1]
    comps[(color, len(marks))] = vertices[marks[-1] :]
    return comps


def _build_rep(
    n: int,
    p: tuple[int, ...],
    q: tuple[int, ...],
    orig_vertex: tuple[int, ...] | None,
    validate: bool,
) -> BtRep:
    # Path() canonicalizes orientation, so build the profile straight from
    # the traversal tuples; the representation is orientation-sensitive.
    common = set(p) & set(q)
    if not common:
        raise InvalidBtRep("traversals share no vertex")
    a_seq = tuple(v for v in p if v in common)
    b_seq = tuple(v for v in q if v in common)
    pos = {v: i + 1 for i, v in enumerate(a_seq)}
    prof = IntersectionProfile(len(common), a_seq, b_seq, tuple(pos[v] for v in b_seq))

    edges: list[tuple[int, int, str]] = []
    edges.extend((u, v, COLOR_P) for u, v in zip(p, p[1:]))
    edges.extend((u, v, COLOR_Q) for u, v in zip(q, q[1:]))
    host = MultiGraph.from_colored_edges(n, edges)
    completed = _split_completed(p, prof.a_seq, COLOR_P)
    completed.update(_split_completed(q, prof.a_seq, COLOR_Q))
    rep = BtRep(n, p, q, prof, host, completed, orig_vertex)
    if validate:
        rep.validate()
    return rep


def bt_from_paths(g: Graph, p: Path, q: Path, validate: bool = True) -> BtRep:
    """Representation of p ∪ q with vertices compacted to 0..m-1.

    Shared edges appear twice in the host multigraph, once per color.
    """
    if p.length != q.length:
        raise InvalidBtRep("paths must have equal length")
    if not (p.vertex_set & q.vertex_set):
        raise InvalidBtRep("paths must intersect")
    if not (p.is_valid_in(g) and q.is_valid_in(g)):
        raise InvalidBtRep("paths do not lie in the host graph")
    used = sorted(p.vertex_set | q.vertex_set)
    ren = {v: i for i, v in enumerate(used)}
    pv = tuple(ren[v] for v in p.vertices)
    qv = tuple(ren[v] for v in q.vertices)
    return _build_rep(len(used), pv, qv, tuple(used), validate)


def bt_generic(
    sigma: Perm,
    lengths: GenericLengths | Mapping[CompKey, int] | None = None,
    validate: bool = True,
) -> BtRep:
    """Concrete realization of a configuration with chosen component lengths.

    Shared vertices take ids 0..ell-1 in first-path order; interior vertices
    are appended as needed.  Internal components need length >= 1, extremal
    components length >= 0; a length-1 internal component shared by both
    traversals becomes a duplicated edge.
    """
    ell = len(sigma)
    if sorted(sigma) != list(range(1, ell + 1)):
        raise ValueError("sigma is not a permutation of 1..ell")
    if lengths is None:
        lengths = GenericLengths()
    lens = lengths.resolve(ell) if isinstance(lengths, GenericLengths) else dict(lengths)
    for (color, i), val in lens.items():
        low = 0 if i in (0, ell) else 1
        if val < low:
            raise InvalidBtRep(f"component ({color},{i}) cannot have length {val}")

    counter = ell  # next fresh vertex id

    def fresh(k: int) -> list[int]:
        nonlocal counter
        out = list(range(counter, counter + k))
        counter += k
        return out

    def traverse(order: list[int], color: str) -> tuple[int, ...]:
        verts: list[int] = []
        verts.extend(reversed(fresh(lens[(color, 0)])))
        verts.append(order[0])
        for i in range(1, ell):
            verts.extend(fresh(lens[(color, i)] - 1))
            verts.append(order[i])
        verts.extend(fresh(lens[(color, ell)]))
        return tuple(verts)

    p = traverse(list(range(ell)), COLOR_P)
    q = traverse([sigma[j] - 1 for j in range(ell)], COLOR_Q)
    if len(p) != len(q):
        raise InvalidBtRep(
            "component lengths give traversals of different total length"
        )
    try:
        return _build_rep(counter, p, q, None, validate)
    except InvalidBtRep:
        raise
    except ValueError as exc:  # multigraph invariant breaches surface here
        raise InvalidBtRep(str(exc)) from exc
