"""Connection status of component pairs in a two-colored representation.

The length identities behind "not directly connectable" must hold for every
choice of component lengths, not just the concrete instantiation at hand, so
the oracle works symbolically: components are cut into arcs at the connector
endpoints, valid length assignments form the affine space where every swap
unit keeps equal color sums, and a certificate is a pair of distinct paths
through the connector whose combined arc usage makes the doubled-length
identity an algebraic consequence of those equalities.  Local
non-connectability is certified by an explicit four-path witness inside a
building block; such a witness transfers to all lengths because it uses
whole arcs and covers the block exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .blocks import Block, BlockTree
from .btrep import BtRep, CompKey
from .graphs import COLOR_P, COLOR_Q, mask_of
from .profiles import EXCEPTIONAL_ELL5_CASES, canonical_form

STATUS_ADJACENT_NDC = "adjacent_ndc"
STATUS_EXTREMAL_NDC = "extremal_ndc"
STATUS_NDC_BY_ORACLE = "ndc_by_oracle"
STATUS_LNC = "lnc"
STATUS_WNDC = "wndc"
STATUS_NOT_CLASSIFIED = "not_classified"

OVERALL_ALL_LNC = "all_lnc"
OVERALL_TD = "td"
OVERALL_EXCEPTIONAL = "exceptional"
OVERALL_MIXED = "mixed"

CLASSIFY_ELL_MAX = 6


@dataclass(frozen=True)
class Attachment:
    """Abstract connector endpoints: one vertex inside each component.

    The connector length never changes the outcome: a certificate pair uses
    the connector once per path, so the identity is uniform in its length.
    """

    x: int
    y: int
    r_length: int = 1

    def __post_init__(self):
        if self.r_length < 1:
            raise ValueError("a connector has length at least 1")
        if self.x == self.y:
            raise ValueError("connector endpoints must differ")


@dataclass(frozen=True)
class LncWitness:
    x: int
    y: int
    x1: tuple[int, ...]
    y1: tuple[int, ...]
    x2: tuple[int, ...]
    y2: tuple[int, ...]


@dataclass(frozen=True)
class PairVerdict:
    status: str
    witness: object = None


@dataclass(frozen=True)
class BtVerdict:
    overall: str
    per_pair: dict[tuple[CompKey, CompKey], PairVerdict]
    paper_case: int | None = None


def _nullspace(rows: list[list[int]], dim: int) -> list[list[Fraction]]:
    """Basis of {v : row . v = 0 for all rows}, exact rational arithmetic."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(dim) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(v)
    return basis


class ArcSystem:
    """Arc-level view of a representation with connectors attached.

    Special points are the shared vertices, the four path tips, and the
    connector endpoints; arcs are the component segments between them.
    """

    def __init__(self, rep: BtRep, atts: Sequence[Attachment]):
        self.rep = rep
        cut: set[int] = set(rep.profile.a_seq)
        cut.update(
            (rep.p_vertices[0], rep.p_vertices[-1], rep.q_vertices[0], rep.q_vertices[-1])
        )
        for att in atts:
            if rep.intersection_mask & ((1 << att.x) | (1 << att.y)):
                raise ValueError("connector endpoints may not be shared path vertices")
            cut.add(att.x)
            cut.add(att.y)
        self.arcs: list[tuple[int, int, CompKey, int]] = []  # (u, v, comp, weight)
        for key in sorted(rep.completed):
            run = rep.completed[key]
            if len(run) < 2:
                continue
            seg_start = 0
            for i in range(1, len(run)):
                if run[i] in cut or i == len(run) - 1:
                    self.arcs.append((run[seg_start], run[i], key, i - seg_start))
                    seg_start = i
        self.n_arcs = len(self.arcs)
        self.bridges: list[tuple[int, int]] = [(att.x, att.y) for att in atts]
        self.adj: dict[int, list[tuple[int, int]]] = {}  # vertex -> (other, arc_id)
        for aid, (u, v, _, _) in enumerate(self.arcs):
            self.adj.setdefault(u, []).append((v, aid))
            self.adj.setdefault(v, []).append((u, aid))
        self.bridge_ids: list[int] = []
        for u, v in self.bridges:
            bid = self.n_arcs + len(self.bridge_ids)
            self.bridge_ids.append(bid)
            self.adj.setdefault(u, []).append((v, bid))
            self.adj.setdefault(v, []).append((u, bid))
        for v in self.adj:
            self.adj[v].sort()

        rows = [self._functional(b) for b in rep.block_tree.all_blocks()]
        rows.append(
            [1 if key[0] == COLOR_P else -1 for _, _, key, _ in self.arcs]
        )
        self.null_basis = _nullspace(rows, self.n_arcs)
        self.target_sig = tuple(sum(vec) for vec in self.null_basis)

    def _functional(self, block: Block) -> list[int]:
        members = set(block.comp_keys)
        return [
            (1 if key[0] == COLOR_P else -1) if key in members else 0
            for _, _, key, _ in self.arcs
        ]

    def _signature(self, arc_ids: Iterable[int]) -> tuple[Fraction, ...]:
        sig = [Fraction(0)] * len(self.null_basis)
        for aid in arc_ids:
            if aid < self.n_arcs:
                for k, vec in enumerate(self.null_basis):
                    sig[k] += vec[aid]
        return tuple(sig)

    def _paths_through_bridges(self) -> list[frozenset[int]]:
        """Arc-id sets of vertex-simple paths using every connector."""
        need = set(self.bridge_ids)
        out: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()

        def dfs(v: int, visited: set[int], used: list[int], missing: int):
            if missing == 0:
                fs = frozenset(used)
                if fs not in seen:
                    seen.add(fs)
                    out.append(fs)
                # longer continuations may still reach new certificates
            for nxt, aid in self.adj.get(v, ()):
                if nxt in visited or aid in used:
                    continue
                visited.add(nxt)
                used.append(aid)
                dfs(nxt, visited, used, missing - (1 if aid in need else 0))
                used.pop()
                visited.remove(nxt)

        starts = sorted(self.adj)
        for s in starts:
            dfs(s, {s}, [], len(need))
        return out

    def _xy_paths_avoiding_bridge(self) -> list[frozenset[int]]:
        """Arc-id sets of simple paths joining the single connector's endpoints."""
        (x, y) = self.bridges[0]
        out: list[frozenset[int]] = []
        seen: set[frozenset[int]] = set()

        def dfs(v: int, visited: set[int], used: list[int]):
            if v == y:
                fs = frozenset(used)
                if fs not in seen:
                    seen.add(fs)
                    out.append(fs)
                return
            for nxt, aid in self.adj.get(v, ()):
                if nxt in visited or aid >= self.n_arcs:
                    continue
                visited.add(nxt)
                used.append(aid)
                dfs(nxt, visited, used)
                used.pop()
                visited.remove(nxt)

        dfs(x, {x}, [])
        return out

    def certificate_exists(self) -> bool:
        """Two distinct paths, each through every connector, whose combined
        arc usage forces the doubled length identity at all valid lengths."""
        paths = self._paths_through_bridges()
        by_sig: dict[tuple, list[frozenset[int]]] = {}
        for fs in paths:
            by_sig.setdefault(self._signature(fs), []).append(fs)
        for sig, members in by_sig.items():
            partner_sig = tuple(t - s for t, s in zip(self.target_sig, sig))
            partners = by_sig.get(partner_sig)
            if not partners:
                continue
            if partner_sig != sig:
                return True
            if len(members) >= 2:
                return True
        return False

    def path_cycle_certificate_exists(self) -> bool:
        """A path and a cycle, both through the connector, same identity."""
        if len(self.bridges) != 1:
            raise ValueError("path-plus-cycle certificates use one connector")
        cycles = self._xy_paths_avoiding_bridge()  # plus the bridge: a cycle
        if not cycles:
            return False
        paths = self._paths_through_bridges()
        path_sigs = {self._signature(fs) for fs in paths}
        for fs in cycles:
            sig = self._signature(fs)
            partner = tuple(t - s for t, s in zip(self.target_sig, sig))
            if partner in path_sigs:
                return True
        return False


def ndc_oracle(rep: BtRep, att: Attachment) -> bool:
    """Not directly connectable through this connector placement.

    True iff two distinct paths through the connector combine to total length
    2L + 2L(R) identically in the component lengths, so that any graph
    realizing the connection contradicts maximality of the defining paths.
    """
    return ArcSystem(rep, [att]).certificate_exists()


def pair_attachments(
    rep: BtRep, a: CompKey, b: CompKey, r_length: int = 1
) -> list[Attachment]:
    return [
        Attachment(x, y, r_length)
        for x in rep.reduced[a]
        for y in rep.reduced[b]
        if x != y
    ]


def pair_is_ndc(rep: BtRep, a: CompKey, b: CompKey, r_length: int = 1) -> bool:
    """Not directly connectable: every connector placement has a certificate."""
    if not rep.reduced[a] or not rep.reduced[b]:
        return True
    return all(ndc_oracle(rep, att) for att in pair_attachments(rep, a, b, r_length))


def is_td(rep: BtRep) -> bool:
    """Totally disconnected: every pair of distinct components is NDC."""
    keys = rep.component_keys(nonempty_only=True)
    return all(
        pair_is_ndc(rep, a, b) for a, b in itertools.combinations(keys, 2)
    )


# -- local non-connectability -------------------------------------------------


def _embedded_esu_edge_sets(
    rep: BtRep, block: Block
) -> list[tuple[frozenset, frozenset, frozenset]]:
    """(all, P-part, Q-part) edge-key sets for each descendant block's unit."""
    out = []
    for child in block.descendants():
        p_edges, q_edges = set(), set()
        for key in child.esu.keys:
            for u, v, c in rep.component_edges(key):
                ek = (min(u, v), max(u, v), c)
                (p_edges if c == COLOR_P else q_edges).add(ek)
        out.append(
            (frozenset(p_edges | q_edges), frozenset(p_edges), frozenset(q_edges))
        )
    return out


def _block_paths_from(
    rep: BtRep,
    block: Block,
    start: int,
    endpoints: Sequence[int],
    esu_rules: list[tuple[frozenset, frozenset, frozenset]],
) -> list[tuple[tuple[int, ...], frozenset, int]]:
    """Simple paths from start to any block endpoint, with their edge keys.

    Zero-length paths are allowed.  An embedded swap unit must be avoided or
    crossed entirely along one of its colors.
    """
    adj: dict[int, list[tuple[int, tuple]]] = {}
    for key in block.comp_keys:
        for u, v, c in rep.component_edges(key):
            ek = (min(u, v), max(u, v), c)
            adj.setdefault(u, []).append((v, ek))
            adj.setdefault(v, []).append((u, ek))
    for v in adj:
        adj[v].sort()
    ends = set(endpoints)
    out: list[tuple[tuple[int, ...], frozenset, int]] = []

    def ok_rules(edges: frozenset) -> bool:
        for full, pp, qq in esu_rules:
            hit = edges & full
            if hit and hit != pp and hit != qq:
                return False
        return True

    def dfs(seq: list[int], edges: set):
        v = seq[-1]
        if v in ends:
            fe = frozenset(edges)
            if ok_rules(fe):
                out.append((tuple(seq), fe, v))
            # may pass through one endpoint on the way to another
        for nxt, ek in adj.get(v, ()):
            if nxt in seq or ek in edges:
                continue
            seq.append(nxt)
            edges.add(ek)
            dfs(seq, edges)
            seq.pop()
            edges.remove(ek)

    dfs([start], set())
    return out


def find_lnc_witness(
    rep: BtRep, block: Block, a: CompKey, b: CompKey
) -> dict[tuple[int, int], LncWitness] | None:
    """Local non-connectability witnesses for every connector placement.

    For each x in one component and y in the other: two vertex-disjoint path
    pairs from x and y to distinct block endpoints whose four edge sets
    partition the block.  None as soon as one placement has no witness.
    """
    if a[0] == b[0]:
        raise ValueError("local non-connectability concerns cross-color pairs")
    block_edges = []
    for key in block.comp_keys:
        for u, v, c in rep.component_edges(key):
            block_edges.append((min(u, v), max(u, v), c))
    all_edges = frozenset(block_edges)
    if len(all_edges) != len(block_edges):
        raise AssertionError("duplicate edge keys inside one block")
    esu_rules = _embedded_esu_edge_sets(rep, block)
    endpoints = block.endpoints
    witnesses: dict[tuple[int, int], LncWitness] = {}
    for x in rep.reduced[a]:
        from_x = _block_paths_from(rep, block, x, endpoints, esu_rules)
        for y in rep.reduced[b]:
            from_y = _block_paths_from(rep, block, y, endpoints, esu_rules)
            pairs = []
            for (xs, xe, xend) in from_x:
                xmask = mask_of(xs)
                for (ys, ye, yend) in from_y:
                    if xend == yend or xe & ye:
                        continue
                    if xmask & mask_of(ys):
                        continue
                    pairs.append((xs, ys, xe | ye))
            pairs.sort(key=lambda t: (t[0], t[1]))
            # the partner pair must use exactly the complementary edges
            by_edges: dict[frozenset, tuple] = {}
            found = None
            for xs, ys, used in pairs:
                partner = by_edges.get(all_edges - used)
                if partner is not None:
                    found = LncWitness(x, y, partner[0], partner[1], xs, ys)
                    break
                by_edges.setdefault(used, (xs, ys))
            if found is None:
                return None
            total = (
                len(found.x1) + len(found.y1) + len(found.x2) + len(found.y2) - 4
            )
            if total != 2 * block.length:
                raise AssertionError(
                    "witness paths do not add up to twice the block length"
                )
            witnesses[(x, y)] = found
    return witnesses


def esu_is_lnc(rep: BtRep, block: Block) -> bool:
    return all(
        find_lnc_witness(rep, block, a, b) is not None
        for a, b in block.esu.cross_color_pairs(rep)
    )


def all_esus_lnc(rep: BtRep, tree: BlockTree | None = None) -> bool:
    tree = tree or rep.block_tree
    if not tree.complete:
        return False
    return all(esu_is_lnc(rep, b) for b in tree.all_blocks())


# -- NC / WD ------------------------------------------------------------------


def nc_check(rep: BtRep, tree: BlockTree, a: CompKey, b: CompKey) -> PairVerdict:
    """Non-connectability of a cross-color pair inside one swap unit.

    A local witness settles it.  Otherwise the certificate oracle must
    succeed for every placement; connectors routed through one color of
    another unit are covered because the certificates already hold across
    all color swaps of the other units.  In a bare whole-graph block the
    oracle is consulted first: with no embedded structure the local route
    adds nothing over it.
    """
    block = tree.block_of_component(a)
    if block is None or block is not tree.block_of_component(b):
        raise ValueError("pair must live in one exterior swap unit")
    bare = block.kind == "whole" and not block.children
    if bare and pair_is_ndc(rep, a, b):
        return PairVerdict(STATUS_NDC_BY_ORACLE)
    if find_lnc_witness(rep, block, a, b) is not None:
        return PairVerdict(STATUS_LNC)
    if not bare and pair_is_ndc(rep, a, b):
        return PairVerdict(STATUS_NDC_BY_ORACLE)
    return PairVerdict(STATUS_NOT_CLASSIFIED)


def wd_check(rep: BtRep, a: CompKey, b: CompKey) -> bool:
    """Weakly non-connectable: every placement has a two-path certificate or
    a path-plus-cycle certificate."""
    if not rep.reduced[a] or not rep.reduced[b]:
        return True
    for att in pair_attachments(rep, a, b):
        system = ArcSystem(rep, [att])
        if system.certificate_exists():
            continue
        if not system.path_cycle_certificate_exists():
            return False
    return True


def is_wd(rep: BtRep) -> bool:
    keys = rep.component_keys(nonempty_only=True)
    return all(
        wd_check(rep, a, b)
        for a, b in itertools.combinations(keys, 2)
        if a[0] != b[0]
    )


# -- whole-representation classification --------------------------------------


def _pair_verdict(rep: BtRep, tree: BlockTree, a: CompKey, b: CompKey) -> PairVerdict:
    if rep.components_adjacent(a, b):
        return PairVerdict(STATUS_ADJACENT_NDC)
    if rep.is_extremal(a) and rep.is_extremal(b):
        return PairVerdict(STATUS_EXTREMAL_NDC)
    block_a = tree.block_of_component(a)
    if block_a is not None and block_a is tree.block_of_component(b):
        wit = find_lnc_witness(rep, block_a, a, b)
        if wit is not None:
            return PairVerdict(STATUS_LNC, wit)
    if pair_is_ndc(rep, a, b):
        return PairVerdict(STATUS_NDC_BY_ORACLE)
    if wd_check(rep, a, b):
        return PairVerdict(STATUS_WNDC)
    return PairVerdict(STATUS_NOT_CLASSIFIED)


def _has_block_structure(tree: BlockTree) -> bool:
    """More than a single bare whole-graph block."""
    if not tree.complete:
        return False
    if len(tree.blocks) != 1:
        return True
    only = tree.blocks[0]
    return only.kind != "whole" or bool(only.children)


def classify_bt(rep: BtRep) -> BtVerdict:
    """Overall and per-pair connection verdicts for a representation.

    Structured representations (a concatenation, or a whole block with
    embedded units) are classified by local non-connectability first, then
    total disconnection; structureless ones the other way around, since for
    them the swap-unit machinery adds nothing over the plain oracle.  The
    three exceptional five-point configurations are recognized by class when
    neither label applies.
    """
    if rep.ell > CLASSIFY_ELL_MAX:
        raise ValueError(f"classification handles ell <= {CLASSIFY_ELL_MAX}")
    tree = rep.block_tree
    per_pair: dict[tuple[CompKey, CompKey], PairVerdict] = {}
    keys = rep.component_keys(nonempty_only=True)
    for a, b in itertools.combinations(keys, 2):
        if a[0] != b[0]:
            per_pair[(a, b)] = _pair_verdict(rep, tree, a, b)

    cc = canonical_form(rep.profile.sigma)
    if _has_block_structure(tree):
        if all_esus_lnc(rep, tree):
            overall = OVERALL_ALL_LNC
        elif is_td(rep):
            overall = OVERALL_TD
        elif rep.ell == 5 and cc.paper_case in EXCEPTIONAL_ELL5_CASES:
            overall = OVERALL_EXCEPTIONAL
        else:
            overall = OVERALL_MIXED
    else:
        if is_td(rep):
            overall = OVERALL_TD
        elif rep.ell == 5 and cc.paper_case in EXCEPTIONAL_ELL5_CASES:
            overall = OVERALL_EXCEPTIONAL
        elif tree.complete and all_esus_lnc(rep, tree):
            overall = OVERALL_ALL_LNC
        else:
            overall = OVERALL_MIXED
    return BtVerdict(overall, per_pair, cc.paper_case)


# -- third-path admissibility ---------------------------------------------------


@dataclass(frozen=True)
class ThirdPathAnalysis:
    feasible_pairs: tuple[tuple[CompKey, CompKey], ...]
    admissible_sets: tuple[tuple[tuple[CompKey, CompKey], ...], ...]
    excluded_simultaneous: tuple[tuple[tuple[CompKey, CompKey], ...], ...]
    viable_cross_color_sets: tuple[tuple[tuple[CompKey, CompKey], ...], ...] = ()

    @property
    def admits_disjoint_third_path(self) -> bool:
        return bool(self.viable_cross_color_sets)


def _set_feasible(rep: BtRep, pairs: Sequence[tuple[CompKey, CompKey]]) -> bool:
    """Some simultaneous placement of one connector per pair is certificate-free."""
    choice_lists = [pair_attachments(rep, a, b) for a, b in pairs]
    for combo in itertools.product(*choice_lists):
        # connectors may share an endpoint: one vertex where the third path
        # enters and leaves the same component
        if not ArcSystem(rep, list(combo)).certificate_exists():
            return True
    return False


def third_path_touch_filter(rep: BtRep, max_set_size: int = 3) -> ThirdPathAnalysis:
    """Connection sets a third longest path could realize between components.

    All-LNC or TD representations admit no cross-color connection at all, so
    three longest paths must share a vertex there and the result is empty.
    Otherwise each returned set of pairs can be bridged simultaneously with
    no certificate forcing a longer path; sets with at most one cross-color
    pair cannot be realized by a path disjoint from both defining paths.
    """
    verdict = classify_bt(rep)
    if verdict.overall in (OVERALL_ALL_LNC, OVERALL_TD):
        return ThirdPathAnalysis((), (), ())
    keys = rep.component_keys(nonempty_only=True)
    feasible = [
        (a, b)
        for a, b in itertools.combinations(keys, 2)
        if not pair_is_ndc(rep, a, b)
    ]
    admissible: list[tuple[tuple[CompKey, CompKey], ...]] = []
    excluded: list[tuple[tuple[CompKey, CompKey], ...]] = []
    viable: list[tuple[tuple[CompKey, CompKey], ...]] = []
    for size in range(1, max_set_size + 1):
        for combo in itertools.combinations(feasible, size):
            if size > 1 and not _set_feasible(rep, combo):
                excluded.append(combo)
                continue
            admissible.append(combo)
            cross = sum(1 for a, b in combo if a[0] != b[0])
            if cross >= 2:
                viable.append(combo)
    return ThirdPathAnalysis(
        tuple(feasible), tuple(admissible), tuple(excluded), tuple(viable)
    )
