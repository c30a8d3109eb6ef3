"""Intersection permutations of two longest paths and their configuration classes.

Two paths meeting in ell vertices induce a permutation sigma with
b_j = a_{sigma(j)}, where a and b list the shared vertices in traversal
order along each path.  Configurations are orbits of sigma under exchanging
the two paths (inverse) and reversing either traversal (composition with
the order-reversing permutation rho on either side).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .longest_paths import Path

Perm = tuple[int, ...]

CLASS_ELL_MAX = 8


def identity(ell: int) -> Perm:
    return tuple(range(1, ell + 1))


def reversal(ell: int) -> Perm:
    return tuple(range(ell, 0, -1))


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def orbit_of(sigma: Perm) -> frozenset[Perm]:
    """Closure of sigma under inversion and one-sided reversal composition."""
    rho = reversal(len(sigma))
    out = {sigma}
    frontier = [sigma]
    while frontier:
        t = frontier.pop()
        for u in (invert(t), compose(rho, t), compose(t, rho)):
            if u not in out:
                out.add(u)
                frontier.append(u)
    return frozenset(out)


@dataclass(frozen=True)
class IntersectionProfile:
    ell: int
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    sigma: Perm

    def __post_init__(self):
        if sorted(self.a_seq) != sorted(self.b_seq):
            raise ValueError("a_seq and b_seq must order the same vertex set")
        if sorted(self.sigma) != list(range(1, self.ell + 1)):
            raise ValueError("sigma is not a permutation of 1..ell")
        for j in range(self.ell):
            if self.b_seq[j] != self.a_seq[self.sigma[j] - 1]:
                raise ValueError("sigma does not map a_seq onto b_seq")


def intersection_profile(p: Path, q: Path) -> IntersectionProfile:
    """Traversal orders of the shared vertices and the permutation linking them."""
    if p.length != q.length:
        raise ValueError("profiles are defined for equal-length paths")
    common = p.vertex_set & q.vertex_set
    if not common:
        raise ValueError("paths share no vertex")
    a_seq = tuple(v for v in p.vertices if v in common)
    b_seq = tuple(v for v in q.vertices if v in common)
    pos = {v: i + 1 for i, v in enumerate(a_seq)}
    sigma = tuple(pos[v] for v in b_seq)
    return IntersectionProfile(len(common), a_seq, b_seq, sigma)


@dataclass(frozen=True)
class ConfigClass:
    ell: int
    canonical: Perm
    orbit: frozenset[Perm]
    paper_case: int | None = None

    @property
    def verdict_label(self) -> str | None:
        table = _case_tables().get(self.ell)
        if table is None or self.paper_case is None:
            return None
        return table[self.paper_case][1]


def canonical_form(sigma: Perm) -> ConfigClass:
    orb = orbit_of(sigma)
    canon = min(orb)
    ell = len(sigma)
    case = _case_lookup(ell).get(canon)
    return ConfigClass(ell, canon, orb, case)


@lru_cache(maxsize=None)
def enumerate_classes(ell: int) -> tuple[ConfigClass, ...]:
    """All configuration classes of S_ell, sorted by canonical representative."""
    if not 1 <= ell <= CLASS_ELL_MAX:
        raise ValueError(f"class enumeration handles 1 <= ell <= {CLASS_ELL_MAX}")
    seen: set[Perm] = set()
    out: list[ConfigClass] = []
    for p in itertools.permutations(range(1, ell + 1)):
        if p in seen:
            continue
        cc = canonical_form(p)
        seen.update(cc.orbit)
        out.append(cc)
    return tuple(sorted(out, key=lambda c: c.canonical))


# -- expected tables for ell = 4 and ell = 5 ---------------------------------
#
# Case number -> (row permutations, connection verdict).  "--" marks the
# three configurations that the rest of the toolkit treats as exceptional.

TABLE_ELL4: dict[int, tuple[tuple[Perm, ...], str]] = {
    1: (((1, 2, 3, 4), (4, 3, 2, 1)), "LNC"),
    2: (((1, 2, 4, 3), (3, 4, 2, 1), (4, 3, 1, 2), (2, 1, 3, 4)), "LNC"),
    3: (((1, 3, 2, 4), (4, 2, 3, 1)), "LNC"),
    4: (
        (
            (1, 3, 4, 2),
            (1, 4, 2, 3),
            (2, 3, 1, 4),
            (2, 4, 3, 1),
            (3, 1, 2, 4),
            (3, 2, 4, 1),
            (4, 1, 3, 2),
            (4, 2, 1, 3),
        ),
        "LNC",
    ),
    5: (((1, 4, 3, 2), (2, 3, 4, 1), (4, 1, 2, 3), (3, 2, 1, 4)), "LNC"),
    6: (((2, 1, 4, 3), (3, 4, 1, 2)), "LNC"),
    7: (((2, 4, 1, 3), (3, 1, 4, 2)), "TD"),
}

TABLE_ELL5: dict[int, tuple[tuple[Perm, ...], str]] = {
    1: (((1, 2, 3, 4, 5), (5, 4, 3, 2, 1)), "LNC"),
    2: (((1, 2, 3, 5, 4), (4, 5, 3, 2, 1), (2, 1, 3, 4, 5), (5, 4, 3, 1, 2)), "LNC"),
    3: (((1, 2, 4, 3, 5), (5, 3, 4, 2, 1), (1, 3, 2, 4, 5), (5, 4, 2, 3, 1)), "LNC"),
    4: (
        (
            (1, 2, 4, 5, 3),
            (3, 5, 4, 2, 1),
            (1, 2, 5, 3, 4),
            (4, 3, 5, 2, 1),
            (3, 1, 2, 4, 5),
            (5, 4, 2, 1, 3),
            (2, 3, 1, 4, 5),
            (5, 4, 1, 3, 2),
        ),
        "LNC",
    ),
    5: (((1, 2, 5, 4, 3), (3, 4, 5, 2, 1), (3, 2, 1, 4, 5), (5, 4, 1, 2, 3)), "LNC"),
    6: (((1, 3, 2, 5, 4), (4, 5, 2, 3, 1), (2, 1, 4, 3, 5), (5, 3, 4, 1, 2)), "--"),
    7: (((1, 3, 4, 2, 5), (5, 2, 4, 3, 1), (1, 4, 2, 3, 5), (5, 3, 2, 4, 1)), "LNC"),
    8: (
        (
            (1, 3, 4, 5, 2),
            (2, 5, 4, 3, 1),
            (4, 1, 2, 3, 5),
            (5, 3, 2, 1, 4),
            (1, 5, 2, 3, 4),
            (4, 3, 2, 5, 1),
            (2, 3, 4, 1, 5),
            (5, 1, 4, 3, 2),
        ),
        "LNC",
    ),
    9: (
        (
            (1, 3, 5, 2, 4),
            (4, 2, 5, 3, 1),
            (2, 4, 1, 3, 5),
            (5, 3, 1, 4, 2),
            (1, 4, 2, 5, 3),
            (3, 5, 2, 4, 1),
            (3, 1, 4, 2, 5),
            (5, 2, 4, 1, 3),
        ),
        "LNC",
    ),
    10: (
        (
            (1, 3, 5, 4, 2),
            (2, 4, 5, 3, 1),
            (4, 2, 1, 3, 5),
            (5, 3, 1, 2, 4),
            (1, 5, 2, 4, 3),
            (3, 4, 2, 5, 1),
            (3, 2, 4, 1, 5),
            (5, 1, 4, 2, 3),
        ),
        "LNC",
    ),
    11: (((1, 4, 3, 2, 5), (5, 2, 3, 4, 1)), "LNC"),
    12: (
        (
            (1, 4, 3, 5, 2),
            (2, 5, 3, 4, 1),
            (4, 1, 3, 2, 5),
            (5, 2, 3, 1, 4),
            (1, 5, 3, 2, 4),
            (4, 2, 3, 5, 1),
            (2, 4, 3, 1, 5),
            (5, 1, 3, 4, 2),
        ),
        "LNC",
    ),
    13: (((1, 4, 5, 2, 3), (3, 2, 5, 4, 1), (3, 4, 1, 2, 5), (5, 2, 1, 4, 3)), "--"),
    14: (
        (
            (1, 4, 5, 3, 2),
            (2, 3, 5, 4, 1),
            (4, 3, 1, 2, 5),
            (5, 2, 1, 3, 4),
            (1, 5, 4, 2, 3),
            (3, 2, 4, 5, 1),
            (3, 4, 2, 1, 5),
            (5, 1, 2, 4, 3),
        ),
        "--",
    ),
    15: (((1, 5, 3, 4, 2), (2, 4, 3, 5, 1), (4, 2, 3, 1, 5), (5, 1, 3, 2, 4)), "LNC"),
    16: (((1, 5, 4, 3, 2), (2, 3, 4, 5, 1), (4, 3, 2, 1, 5), (5, 1, 2, 3, 4)), "LNC"),
    17: (((2, 1, 3, 5, 4), (4, 5, 3, 1, 2)), "LNC"),
    18: (
        (
            (2, 1, 4, 5, 3),
            (3, 5, 4, 1, 2),
            (3, 1, 2, 5, 4),
            (4, 5, 2, 1, 3),
            (2, 1, 5, 3, 4),
            (4, 3, 5, 1, 2),
            (2, 3, 1, 5, 4),
            (4, 5, 1, 3, 2),
        ),
        "LNC",
    ),
    19: (((2, 1, 5, 4, 3), (3, 4, 5, 1, 2), (3, 2, 1, 5, 4), (4, 5, 1, 2, 3)), "LNC"),
    20: (
        (
            (2, 3, 5, 1, 4),
            (4, 1, 5, 3, 2),
            (2, 5, 1, 3, 4),
            (4, 3, 1, 5, 2),
            (4, 1, 2, 5, 3),
            (3, 5, 2, 1, 4),
            (3, 1, 4, 5, 2),
            (2, 5, 4, 1, 3),
        ),
        "LNC",
    ),
    21: (((2, 4, 1, 5, 3), (3, 5, 1, 4, 2), (3, 1, 5, 2, 4), (4, 2, 5, 1, 3)), "TD"),
    22: (
        (
            (2, 4, 5, 1, 3),
            (3, 1, 5, 4, 2),
            (3, 5, 1, 2, 4),
            (4, 2, 1, 5, 3),
            (4, 1, 5, 2, 3),
            (3, 2, 5, 1, 4),
            (3, 4, 1, 5, 2),
            (2, 5, 1, 4, 3),
        ),
        "LNC",
    ),
    23: (((2, 5, 3, 1, 4), (4, 1, 3, 5, 2)), "TD"),
}

EXCEPTIONAL_ELL5_CASES = (6, 13, 14)


@lru_cache(maxsize=None)
def _case_tables() -> dict[int, dict[int, tuple[tuple[Perm, ...], str]]]:
    return {4: TABLE_ELL4, 5: TABLE_ELL5}


@lru_cache(maxsize=None)
def _case_lookup(ell: int) -> dict[Perm, int]:
    table = _case_tables().get(ell)
    if table is None:
        return {}
    out: dict[Perm, int] = {}
    for case, (perms, _) in table.items():
        out[min(orbit_of(perms[0]))] = case
    return out


def expected_verdict(ell: int, case: int) -> str:
    return _case_tables()[ell][case][1]


def class_for_case(ell: int, case: int) -> ConfigClass:
    perms, _ = _case_tables()[ell][case]
    return canonical_form(perms[0])
