"""Graver basis of the toric ideal of a graph, built from primitive subgraphs.

An edge set W underlies a primitive walk when it is an even cycle, or when
it has several blocks, each block is a cycle or a cut edge, each cut vertex
lies in exactly two blocks, and each cut vertex splits W into two parts
that both hold an odd number of cycle edges.  The walk over such a W uses
cycle edges once and cut edges twice, and its binomial is the Graver
element.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .errors import CapExceeded, InputError, InternalInconsistency
from .graph_core import (
    DEFAULT_MAX_CYCLES,
    BlockDecomposition,
    BlockKind,
    BlockTree,
    Graph,
    Walk,
    block_tree,
    blocks,
    cycle_walk,
    enumerate_simple_cycles,
    is_connected,
    walk_binomial,
)
from .toric_algebra import Binomial, support

DEFAULT_MAX_SUBGRAPHS = 10**5
DEFAULT_MAX_STATES = 10**6
BRUTE_FORCE_MAX_EDGES = 18


@dataclass(frozen=True)
class PrimitiveSubgraph:
    edges: frozenset[int]
    decomposition: BlockDecomposition
    tree: BlockTree

    @property
    def cyclic_edge_count(self) -> int:
        return sum(len(b.edges) for b in self.decomposition.blocks if b.kind is BlockKind.CYCLE)

    @property
    def cut_edge_count(self) -> int:
        return len(self.decomposition.cut_edges)


def _part_cyclic_counts(d: BlockDecomposition, v: int) -> tuple[int, int]:
    at = d.blocks_at(v)
    if len(at) != 2:
        raise InputError(f"vertex {v} lies in {len(at)} blocks, not 2")
    by_vertex = defaultdict(list)
    for i, b in enumerate(d.blocks):
        for u in b.vertices:
            by_vertex[u].append(i)
    side = {at[0]}
    todo = [at[0]]
    while todo:
        i = todo.pop()
        for u in d.blocks[i].vertices:
            if u == v:
                continue
            for j in by_vertex[u]:
                if j not in side:
                    side.add(j)
                    todo.append(j)
    if at[1] in side:
        raise InputError(f"vertex {v} does not separate its two blocks")

    def cyclic(ids):
        return sum(len(d.blocks[i].edges) for i in ids if d.blocks[i].kind is BlockKind.CYCLE)

    other = set(range(len(d.blocks))) - side
    return cyclic(side), cyclic(other)


def cut_vertex_parity_check(d: BlockDecomposition, v: int) -> bool:
    """Both parts separated by ``v`` carry an odd number of cycle-block edges."""
    a, b = _part_cyclic_counts(d, v)
    return a % 2 == 1 and b % 2 == 1


def primitive_violation(g: Graph, W) -> str | None:
    """Why ``W`` cannot underlie a primitive walk, or None if it does."""
    W = frozenset(W)
    if not W:
        return "empty edge set"
    if not is_connected(g, W):
        return "not connected"
    d = blocks(g, W)
    for b in d.blocks:
        if b.kind is BlockKind.OTHER:
            return f"block {sorted(b.edges)} is neither a cycle nor a cut edge"
    if len(d.blocks) == 1:
        b = d.blocks[0]
        if b.kind is BlockKind.CYCLE and len(b.edges) % 2 == 0:
            return None
        return "a single block that is not an even cycle"
    for v in sorted(d.cut_vertices):
        k = len(d.blocks_at(v))
        if k != 2:
            return f"cut vertex {v} lies in {k} blocks"
    for v in sorted(d.cut_vertices):
        a, b = _part_cyclic_counts(d, v)
        if a % 2 == 0 or b % 2 == 0:
            return f"cut vertex {v} splits the cycle edges {a} + {b}"
    return None


def is_primitive_underlying(g: Graph, W) -> bool:
    return primitive_violation(g, W) is None


def _build(g: Graph, W) -> PrimitiveSubgraph:
    d = blocks(g, W)
    return PrimitiveSubgraph(frozenset(W), d, block_tree(d))


def enumerate_primitive_subgraphs(
    g: Graph,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    max_subgraphs: int = DEFAULT_MAX_SUBGRAPHS,
    max_states: int = DEFAULT_MAX_STATES,
) -> list[PrimitiveSubgraph]:
    """All primitive subgraphs, sorted by edge set.

    Even cycles are emitted directly.  Everything else has an odd cycle as
    a leaf block, so it is grown from an odd cycle by repeatedly gluing on a
    cycle or a single edge at a vertex that so far lies in one block, with
    the new piece otherwise disjoint from what is there.  Each grown edge
    set is visited once and kept when it passes the primitivity test.
    """
    cycles = enumerate_simple_cycles(g, max_cycles)
    found: dict[frozenset[int], PrimitiveSubgraph] = {}

    def emit(W):
        if W in found:
            return
        if len(found) >= max_subgraphs:
            raise CapExceeded("primitive subgraphs", max_subgraphs)
        found[W] = _build(g, W)

    for c in cycles:
        if len(c) % 2 == 0:
            emit(frozenset(c.edges))

    pieces = [(frozenset(c.edges), frozenset(c.vertices(g))) for c in cycles]
    pieces += [(frozenset((e,)), frozenset((a, b))) for e, (a, b) in enumerate(g.edges) if a != b]
    at_vertex = defaultdict(list)
    for p, (_, vs) in enumerate(pieces):
        for v in vs:
            at_vertex[v].append(p)

    seen: set[frozenset[int]] = set()
    for root, c in enumerate(cycles):
        if len(c) % 2 == 0:
            continue
        es, vs = pieces[root]
        if es in seen:
            continue
        seen.add(es)
        stack = [(es, {v: 1 for v in vs})]
        while stack:
            edges, count = stack.pop()
            if len(edges) > len(pieces[root][0]) and primitive_violation(g, edges) is None:
                emit(edges)
            for x in sorted(v for v, k in count.items() if k == 1):
                for p in at_vertex[x]:
                    pe, pv = pieces[p]
                    if pe & edges:
                        continue
                    if any(u in count for u in pv if u != x):
                        continue
                    grown = edges | pe
                    if grown in seen:
                        continue
                    if len(seen) >= max_states:
                        raise CapExceeded("composer states", max_states)
                    seen.add(grown)
                    nc = dict(count)
                    for u in pv:
                        nc[u] = nc.get(u, 0) + 1
                    stack.append((grown, nc))
    return [found[W] for W in sorted(found, key=sorted)]


def brute_force_primitive_subgraphs(g: Graph, max_edges: int = BRUTE_FORCE_MAX_EDGES) -> list[PrimitiveSubgraph]:
    """Test every nonempty edge subset; only for small graphs."""
    if g.m > max_edges:
        raise CapExceeded("edges for brute-force subgraph search", max_edges)
    out = []
    for r in range(1, g.m + 1):
        for W in itertools.combinations(range(g.m), r):
            if is_primitive_underlying(g, W):
                out.append(_build(g, W))
    return sorted(out, key=lambda P: sorted(P.edges))


def primitive_walk(g: Graph, P: PrimitiveSubgraph) -> Walk:
    """Closed even walk over ``P``: cycle edges once, cut edges out and back.

    A leaf cycle is the root.  Each cycle block is walked in full from the
    vertex it was entered at, detouring into child blocks as their
    attachment vertices come up; a cut edge is crossed, its far subtree
    toured, and crossed back.
    """
    d, t = P.decomposition, P.tree
    if t.node_count == 1:
        root = 0
    else:
        root = min(t.leaves)
    if d.blocks[root].kind is not BlockKind.CYCLE:
        raise InternalInconsistency("root block of a primitive subgraph is not a cycle")

    def children(i, parent):
        out = defaultdict(list)
        for j in t.neighbours[i]:
            if j != parent:
                out[t.shared_vertex(i, j)].append(j)
        return out

    def tour(i, entry, parent):
        b = d.blocks[i]
        kids = children(i, parent)

        def detours(v):
            seq = []
            for j in kids.get(v, ()):
                seq += tour(j, v, i)
            return seq

        if b.kind is BlockKind.CUT_EDGE:
            (e,) = b.edges
            far = g.other_end(e, entry)
            return [e] + detours(far) + [e]
        c = cycle_walk(g, b.edges, entry)
        verts = c.vertices(g)
        seq = []
        for k, e in enumerate(c.edges):
            seq += detours(verts[k])
            seq.append(e)
        return seq

    if t.node_count > 1:
        start = t.shared_vertex(root, t.neighbours[root][0])
    else:
        start = min(d.blocks[root].vertices)
    w = Walk(tuple(tour(root, start, None)), start)
    _check_walk(g, P, w)
    return w


def _check_walk(g: Graph, P: PrimitiveSubgraph, w: Walk) -> None:
    if len(w) % 2 or not w.is_closed(g):
        raise InternalInconsistency(f"walk over {sorted(P.edges)} is not closed and even")
    b = walk_binomial(g, w)
    if not b.is_irreducible():
        raise InternalInconsistency(f"walk over {sorted(P.edges)} puts an edge on both sides")
    if support(b) != P.edges:
        raise InternalInconsistency(f"walk over {sorted(P.edges)} has the wrong support")
    if b.degree != sum(b.minus):
        raise InternalInconsistency("unbalanced walk binomial")


def graver_degree(P: PrimitiveSubgraph) -> int:
    total = P.cyclic_edge_count + 2 * P.cut_edge_count
    if total % 2:
        raise InternalInconsistency(f"odd walk length {total} for a primitive subgraph")
    return total // 2


def primitive_binomial(g: Graph, P: PrimitiveSubgraph) -> Binomial:
    return walk_binomial(g, primitive_walk(g, P)).canonical()


def graver_basis_graph(g: Graph, **caps) -> frozenset[Binomial]:
    return frozenset(primitive_binomial(g, P) for P in enumerate_primitive_subgraphs(g, **caps))


def element_json(g: Graph, P: PrimitiveSubgraph) -> dict:
    return {
        "edges": sorted(P.edges),
        "blocks": P.decomposition.to_json(),
        "degree": graver_degree(P),
        "binomial": primitive_binomial(g, P).to_json(),
    }
