"""Building blocks of a two-colored representation and their exterior swap units.

Internal blocks are 2-connected unions of one subpath per color sharing both
endpoints; extremal blocks pair one tip-containing subpath per color sharing
exactly one (interior) vertex and are taken minimal.  When the blocks tile
the representation it is their concatenation; otherwise the whole graph is a
single block.  Every block's exterior swap unit collects the completed
components not claimed by an embedded internal block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .btrep import BtRep, CompKey, InvalidBtRep
from .graphs import COLOR_P, COLOR_Q

KIND_IBB = "ibb"
KIND_ELEMENTARY_IBB = "elementary_ibb"
KIND_EBB = "ebb"
KIND_ELEMENTARY_EBB = "elementary_ebb"
KIND_WHOLE = "whole"


@dataclass(frozen=True)
class Esu:
    owner_id: int
    keys: tuple[CompKey, ...]

    def cross_color_pairs(self, rep: BtRep) -> list[tuple[CompKey, CompKey]]:
        """Cross-color component pairs with both reduced parts nonempty."""
        ps = [k for k in self.keys if k[0] == COLOR_P and rep.reduced[k]]
        qs = [k for k in self.keys if k[0] == COLOR_Q and rep.reduced[k]]
        return [(p, q) for p in ps for q in qs]


@dataclass(frozen=True)
class Block:
    block_id: int
    kind: str
    endpoints: tuple[int, ...]
    comp_keys: tuple[CompKey, ...]
    p_span: tuple[int, ...]
    q_span: tuple[int, ...]
    children: tuple["Block", ...]
    esu: Esu

    @property
    def length(self) -> int:
        return len(self.p_span) - 1

    def descendants(self) -> Iterator["Block"]:
        for child in self.children:
            yield child
            yield from child.descendants()

    def edges(self, rep: BtRep) -> list[tuple[int, int, str]]:
        out = []
        for key in self.comp_keys:
            out.extend(rep.component_edges(key))
        return out


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[Block, ...]
    complete: bool

    def all_blocks(self) -> Iterator[Block]:
        for b in self.blocks:
            yield b
            yield from b.descendants()

    def esus(self) -> Iterator[Esu]:
        for b in self.all_blocks():
            yield b.esu

    def block_of_component(self, key: CompKey) -> Block | None:
        for b in self.all_blocks():
            if key in b.esu.keys:
                return b
        return None


@dataclass(frozen=True)
class _Segment:
    i: int
    j: int
    q_lo: int
    q_hi: int
    keys: frozenset[CompKey]


def _union_two_connected(rep: BtRep, keys: frozenset[CompKey]) -> bool:
    edges: list[tuple[int, int]] = []
    for key in keys:
        edges.extend((u, v) for u, v, _ in rep.component_edges(key))
    verts = sorted({v for e in edges for v in e})
    if len(verts) < 2:
        return False
    deg = {v: 0 for v in verts}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if any(d < 2 for d in deg.values()):
        return False

    def connected(vs: list[int], es: list[tuple[int, int]]) -> bool:
        if not vs:
            return True
        comp = {vs[0]}
        grew = True
        while grew:
            grew = False
            for u, v in es:
                if (u in comp) != (v in comp):
                    comp.update((u, v))
                    grew = True
        return len(comp) == len(vs)

    if not connected(verts, edges):
        return False
    for w in verts:
        rest_v = [v for v in verts if v != w]
        rest_e = [e for e in edges if w not in e]
        if not connected(rest_v, rest_e):
            return False
    return True


def _ibb_segments(rep: BtRep) -> list[_Segment]:
    a = rep.profile.a_seq
    qpos = {v: t for t, v in enumerate(rep.profile.b_seq)}
    out: list[_Segment] = []
    for i, j in itertools.combinations(range(rep.ell), 2):
        p_int = {a[t] for t in range(i + 1, j)}
        lo, hi = sorted((qpos[a[i]], qpos[a[j]]))
        q_int = {rep.profile.b_seq[t] for t in range(lo + 1, hi)}
        if p_int != q_int:
            continue
        keys = frozenset(
            [(COLOR_P, t) for t in range(i + 1, j + 1)]
            + [(COLOR_Q, t) for t in range(lo + 1, hi + 1)]
        )
        if _union_two_connected(rep, keys):
            out.append(_Segment(i, j, lo, hi, keys))
    return out


@dataclass(frozen=True)
class _ExtremalUnit:
    p_side: str  # "start" | "end"
    q_side: str
    k: int  # index of the common vertex in a_seq
    m: int  # index of the common vertex in b_seq
    keys: frozenset[CompKey]


def _ebb_units(rep: BtRep) -> list[_ExtremalUnit]:
    a, b = rep.profile.a_seq, rep.profile.b_seq
    p, q = rep.p_vertices, rep.q_vertices
    tips = {p[0], p[-1], q[0], q[-1]}
    qpos = {v: t for t, v in enumerate(b)}
    units: list[_ExtremalUnit] = []
    for p_side in ("start", "end"):
        found = None
        ks = range(rep.ell) if p_side == "start" else range(rep.ell - 1, -1, -1)
        for k in ks:
            c = a[k]
            if c in tips:
                continue
            p_int = set(a[:k]) if p_side == "start" else set(a[k + 1 :])
            m = qpos[c]
            for q_side in ("start", "end"):
                q_int = set(b[:m]) if q_side == "start" else set(b[m + 1 :])
                if p_int != q_int:
                    continue
                if p_side == "start":
                    pkeys = [(COLOR_P, t) for t in range(k + 1)]
                else:
                    pkeys = [(COLOR_P, t) for t in range(k + 1, rep.ell + 1)]
                if q_side == "start":
                    qkeys = [(COLOR_Q, t) for t in range(m + 1)]
                else:
                    qkeys = [(COLOR_Q, t) for t in range(m + 1, rep.ell + 1)]
                found = _ExtremalUnit(
                    p_side, q_side, k, m, frozenset(pkeys + qkeys)
                )
                break
            if found:
                break
        if found:
            units.append(found)
    # both tips of Q must not be claimed twice
    if len(units) == 2 and units[0].keys & units[1].keys:
        units = units[:1]
    return units


def _nest_segments(segments: list[_Segment]) -> list[_Segment]:
    """Maximal segments of the family (containment is expected laminar)."""
    for s, t in itertools.combinations(segments, 2):
        inter = s.keys & t.keys
        if inter and not (s.keys <= t.keys or t.keys <= s.keys):
            raise InvalidBtRep("internal blocks overlap without nesting")
    return [
        s
        for s in segments
        if not any(t is not s and s.keys < t.keys for t in segments)
    ]


class _Builder:
    def __init__(self, rep: BtRep):
        self.rep = rep
        self.next_id = 0

    def take_id(self) -> int:
        i = self.next_id
        self.next_id += 1
        return i

    def p_slice(self, u: int, v: int) -> tuple[int, ...]:
        p = self.rep.p_vertices
        i, j = sorted((p.index(u), p.index(v)))
        return p[i : j + 1]

    def q_slice(self, u: int, v: int) -> tuple[int, ...]:
        q = self.rep.q_vertices
        i, j = sorted((q.index(u), q.index(v)))
        return q[i : j + 1]

    def build_ibb(self, seg: _Segment, segments: list[_Segment]) -> Block:
        rep = self.rep
        inner = [s for s in segments if s.keys < seg.keys]
        children = tuple(
            self.build_ibb(s, inner) for s in _nest_segments(inner)
        )
        claimed = set().union(*(set(c.comp_keys) for c in children)) if children else set()
        keys = tuple(sorted(seg.keys))
        esu_keys = tuple(sorted(seg.keys - claimed))
        a = rep.profile.a_seq
        u, v = a[seg.i], a[seg.j]
        kind = (
            KIND_ELEMENTARY_IBB
            if len(keys) == 2 and not children
            else KIND_IBB
        )
        bid = self.take_id()
        block = Block(
            bid,
            kind,
            (u, v) if u < v else (v, u),
            keys,
            self.p_slice(u, v),
            self.q_slice(u, v),
            children,
            Esu(bid, esu_keys),
        )
        _check_block(rep, block)
        return block

    def build_ebb(self, unit: _ExtremalUnit, segments: list[_Segment]) -> Block:
        rep = self.rep
        inner = [s for s in segments if s.keys < unit.keys]
        children = tuple(self.build_ibb(s, inner) for s in _nest_segments(inner))
        claimed = set().union(*(set(c.comp_keys) for c in children)) if children else set()
        keys = tuple(sorted(unit.keys))
        esu_keys = tuple(sorted(unit.keys - claimed))
        c = rep.profile.a_seq[unit.k]
        p, q = rep.p_vertices, rep.q_vertices
        pc = p.index(c)
        qc = q.index(c)
        p_span = p[: pc + 1] if unit.p_side == "start" else p[pc:]
        q_span = q[: qc + 1] if unit.q_side == "start" else q[qc:]
        p_tip = p_span[0] if unit.p_side == "start" else p_span[-1]
        q_tip = q_span[0] if unit.q_side == "start" else q_span[-1]
        kind = (
            KIND_ELEMENTARY_EBB
            if len(keys) == 2 and not children
            else KIND_EBB
        )
        bid = self.take_id()
        block = Block(
            bid,
            kind,
            tuple(sorted({c, p_tip, q_tip})),
            keys,
            p_span,
            q_span,
            children,
            Esu(bid, esu_keys),
        )
        _check_block(rep, block)
        return block

    def build_whole(self, segments: list[_Segment]) -> Block:
        rep = self.rep
        children = tuple(
            self.build_ibb(s, segments) for s in _nest_segments(segments)
        )
        claimed = set().union(*(set(c.comp_keys) for c in children)) if children else set()
        keys = tuple(sorted(rep.completed))
        esu_keys = tuple(sorted(set(keys) - claimed))
        p, q = rep.p_vertices, rep.q_vertices
        bid = self.take_id()
        block = Block(
            bid,
            KIND_WHOLE,
            tuple(sorted({p[0], p[-1], q[0], q[-1]})),
            keys,
            p,
            q,
            children,
            Esu(bid, esu_keys),
        )
        _check_block(rep, block)
        return block


def _check_block(rep: BtRep, block: Block) -> None:
    p_len = sum(
        rep.component_length(k) for k in block.comp_keys if k[0] == COLOR_P
    )
    q_len = sum(
        rep.component_length(k) for k in block.comp_keys if k[0] == COLOR_Q
    )
    if p_len != q_len:
        raise InvalidBtRep(
            f"block {block.kind} spans of unequal length {p_len} vs {q_len}"
        )
    if len(block.p_span) - 1 != p_len:
        raise InvalidBtRep("block span does not match its component lengths")
    # per swap unit the completed-component counts per color agree
    p_cnt = sum(1 for k in block.esu.keys if k[0] == COLOR_P)
    q_cnt = sum(1 for k in block.esu.keys if k[0] == COLOR_Q)
    if p_cnt != q_cnt:
        raise InvalidBtRep("swap unit has unequal component counts per color")


def block_decomposition(rep: BtRep) -> BlockTree:
    """All building blocks with nesting and exterior swap units.

    Returns a complete tree when blocks tile the representation (a
    concatenation) or a single whole-graph block otherwise.  When the two
    paths share an endpoint no whole-graph block exists; the internal blocks
    are still reported, flagged incomplete.
    """
    segments = _ibb_segments(rep)
    units = _ebb_units(rep)
    edge_comps = {
        k for k in rep.completed if rep.component_length(k) >= 1
    }

    builder = _Builder(rep)
    top_units = list(units)
    unit_claims = set().union(*(u.keys for u in top_units)) if top_units else set()
    maximal = _nest_segments(segments)
    free_segments = [s for s in maximal if not (s.keys & unit_claims)]
    claim_list = [u.keys for u in top_units] + [s.keys for s in free_segments]
    claimed: set[CompKey] = set()
    overlap = False
    for ks in claim_list:
        if ks & claimed:
            overlap = True
        claimed |= ks

    if not overlap and claimed == edge_comps and claim_list:
        blocks: list[Block] = []
        for u in top_units:
            blocks.append(builder.build_ebb(u, segments))
        for s in free_segments:
            blocks.append(builder.build_ibb(s, [t for t in segments if t.keys < s.keys]))
        blocks.sort(key=lambda b: min(k[1] for k in b.comp_keys if k[0] == COLOR_P))
        tree = BlockTree(tuple(blocks), True)
    else:
        p, q = rep.p_vertices, rep.q_vertices
        if {p[0], p[-1]} & {q[0], q[-1]}:
            # shared path endpoint: no block covers the whole graph
            blocks = [builder.build_ibb(s, segments) for s in maximal]
            return BlockTree(tuple(blocks), False)
        tree = BlockTree((builder.build_whole(segments),), True)

    seen: dict[CompKey, int] = {}
    for esu in tree.esus():
        for k in esu.keys:
            seen[k] = seen.get(k, 0) + 1
    if any(cnt > 1 for cnt in seen.values()) or edge_comps - set(seen):
        raise InvalidBtRep("exterior swap units do not partition the components")
    return tree


def swap_block(rep: BtRep, block: Block) -> BtRep:
    """Exchange the two colors inside one block; yields an equivalent rep."""
    from .btrep import _build_rep  # local import to avoid a cycle

    p, q = rep.p_vertices, rep.q_vertices
    if block.kind == KIND_WHOLE:
        return _build_rep(rep.n, q, p, rep.orig_vertex, validate=True)

    def splice(host: tuple[int, ...], span: tuple[int, ...], repl: tuple[int, ...]):
        i = host.index(span[0])
        j = host.index(span[-1])
        if i > j:
            i, j = j, i
            span = span[::-1]
        assert host[i : j + 1] == span
        if repl[0] != host[i]:
            repl = repl[::-1]
        assert repl[0] == host[i] and repl[-1] == host[j]
        return host[:i] + repl + host[j + 1 :]

    if block.kind in (KIND_IBB, KIND_ELEMENTARY_IBB):
        new_p = splice(p, block.p_span, block.q_span)
        new_q = splice(q, block.q_span, block.p_span)
    else:  # extremal: spans share exactly the interior endpoint
        c = [v for v in (block.p_span[0], block.p_span[-1]) if v in block.q_span][0]

        def replace_tail(host, span, repl):
            i = host.index(span[0])
            j = host.index(span[-1])
            assert host[i : j + 1] == span
            oriented = repl if repl[0] == c else repl[::-1]  # c first
            if i == 0 and host[0] != c:  # span is a prefix ending at c
                return oriented[::-1] + host[j + 1 :]
            return host[:i] + oriented

        new_p = replace_tail(p, block.p_span, block.q_span)
        new_q = replace_tail(q, block.q_span, block.p_span)
    return _build_rep(rep.n, new_p, new_q, rep.orig_vertex, validate=True)
