"""Embedded example graphs with self-checking expected properties."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_separator
from .longest_paths import Path, longest_path_length, longest_path_vertex_sets
from .graphs import mask_of


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    expected: dict

    def self_check(self) -> None:
        """Re-verify every expected assertion; a failure means a bad transcription."""
        g = self.graph
        exp = self.expected
        if "longest_path_length" in exp:
            got = longest_path_length(g)
            if got != exp["longest_path_length"]:
                raise AssertionError(
                    f"fixture {self.name}: longest path {got} != {exp['longest_path_length']}"
                )
        if "pair" in exp:
            p = Path(tuple(exp["pair"]["p"]))
            q = Path(tuple(exp["pair"]["q"]))
            if not (p.is_valid_in(g) and q.is_valid_in(g)):
                raise AssertionError(f"fixture {self.name}: pair paths not in graph")
            if p.length != exp["longest_path_length"]:
                raise AssertionError(f"fixture {self.name}: pair paths not longest")
            inter = p.vertex_set & q.vertex_set
            if len(inter) != exp["pair"]["intersection_size"]:
                raise AssertionError(f"fixture {self.name}: wrong intersection size")
            if p.vertex_set == q.vertex_set:
                raise AssertionError(f"fixture {self.name}: vertex sets must differ")
            sep = is_separator(g, mask_of(inter))
            if sep != exp["pair"]["separates"]:
                raise AssertionError(
                    f"fixture {self.name}: separator status {sep}, "
                    f"expected {exp['pair']['separates']}"
                )


# An 11-vertex graph whose two longest paths (length 9) share 9 vertices,
# have different vertex sets, and whose shared vertices do NOT separate the
# graph.  Vertex ids follow the drawing left-to-right, top-to-bottom:
#   0=(0,3) 1=(1,3) 2=(2,3) 3=(2,2) 4=(2,0.8) 5=(3,2)
#   6=(4,2) 7=(4,3) 8=(4,0.8) 9=(5,3) 10=(6,3)
_INTRO_EDGES = [
    (0, 1),
    (1, 2),
    (1, 4),
    (4, 6),
    (2, 3),
    (3, 5),
    (5, 6),
    (3, 8),
    (6, 7),
    (7, 9),
    (9, 10),
    (8, 9),
    (2, 7),
    (4, 8),
]

_INTRO_P = (0, 1, 4, 8, 3, 5, 6, 7, 9, 10)  # misses vertex 2
_INTRO_Q = (0, 1, 2, 3, 5, 6, 4, 8, 9, 10)  # misses vertex 7


def intro_fixture() -> Fixture:
    """The 11-vertex example with a non-separating 9-point intersection."""
    fx = Fixture(
        name="intro",
        graph=Graph.from_edges(11, _INTRO_EDGES),
        expected={
            "longest_path_length": 9,
            "pair": {
                "p": _INTRO_P,
                "q": _INTRO_Q,
                "intersection_size": 9,
                "separates": False,
            },
        },
    )
    fx.self_check()
    return fx


def intro_pair() -> tuple[Path, Path]:
    return Path(_INTRO_P), Path(_INTRO_Q)


FIXTURES = {"intro": intro_fixture}


def load_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}") from None
