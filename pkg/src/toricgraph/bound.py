"""Degree bound for Graver elements of graph ideals, checked quantity by quantity.

If every circuit of the toric ideal of G has degree at most n, every Graver
element has degree at most ``n^2 e^(2n/e)``.  ``verify_bound`` recomputes the
intermediate quantities the argument rests on (leaf-path degree sums in the
block tree, number of blocks, edges per block, the long circuit built along
a leaf-to-leaf path) and reports each inequality separately.  The tree
helpers check the counting lemma behind the block bound on arbitrary trees.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import InternalInconsistency
from .graph_circuits import CYCLES_WITH_PATH, SHARED_VERTEX, CircuitWitness, enumerate_circuit_witnesses, validate_witness, witness_degree
from .graph_core import BlockKind, Graph, cycle_walk
from .graph_graver import PrimitiveSubgraph, enumerate_primitive_subgraphs, graver_degree

TOLERANCE = 1e-9


def tree_lemma_bound(M: float) -> float:
    """Most vertices a tree can have when every leaf-to-leaf path has internal degree sum <= M."""
    if M <= 0:
        raise ValueError(f"M must be positive, got {M}")
    return (M / 2 + 1) * math.exp(M / math.e)


def graver_degree_bound(n: int) -> float:
    if n < 1:
        raise ValueError(f"circuit degree bound must be at least 1, got {n}")
    return n * n * math.exp(2 * n / math.e)


def block_count_bound(n: int) -> float:
    if n < 1:
        raise ValueError(f"circuit degree bound must be at least 1, got {n}")
    return n * math.exp(2 * n / math.e)


@dataclass(frozen=True)
class RootedTree:
    """An unrooted tree given by neighbour lists, with a chosen root."""

    neighbours: tuple[tuple[int, ...], ...]
    root: int = 0

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], root: int = 0) -> "RootedTree":
        nb = [[] for _ in range(n)]
        for a, b in edges:
            nb[a].append(b)
            nb[b].append(a)
        t = cls(tuple(tuple(sorted(x)) for x in nb), root)
        if len(edges) != n - 1 or len(t.parent) != n:
            raise ValueError("edges do not form a tree")
        return t

    def rerooted(self, root: int) -> "RootedTree":
        return RootedTree(self.neighbours, root)

    @property
    def size(self) -> int:
        return len(self.neighbours)

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    @property
    def leaves(self) -> list[int]:
        return [v for v in range(self.size) if self.degree(v) == 1]

    @cached_property
    def parent(self) -> dict[int, int | None]:
        par = {self.root: None}
        todo = [self.root]
        while todo:
            v = todo.pop()
            for w in self.neighbours[v]:
                if w not in par:
                    par[w] = v
                    todo.append(w)
        return par

    def root_paths(self) -> list[list[int]]:
        """Paths from the root down to every leaf other than the root."""
        out = []
        stack = [[self.root]]
        while stack:
            path = stack.pop()
            v = path[-1]
            kids = [w for w in self.neighbours[v] if w != self.parent[v]]
            if not kids:
                if v != self.root:
                    out.append(path)
                continue
            for w in reversed(kids):
                stack.append(path + [w])
        return out


def _tree_path(neighbours, a: int, b: int) -> list[int]:
    prev = {a: None}
    todo = deque([a])
    while todo:
        v = todo.popleft()
        if v == b:
            break
        for w in neighbours[v]:
            if w not in prev:
                prev[w] = v
                todo.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def leaf_path_degree_sums(t) -> tuple[int, list[int]]:
    """Largest sum of internal-vertex degrees over leaf-to-leaf paths, and one such path.

    ``t`` is anything with ``neighbours`` lists (a ``RootedTree`` or a block tree);
    the root, if any, is ignored.
    """
    nb = t.neighbours
    if len(nb) < 3:
        raise ValueError("leaf-path sums need a tree with at least three vertices")
    leaves = [v for v in range(len(nb)) if len(nb[v]) == 1]
    best, best_path = -1, []
    for i, a in enumerate(leaves):
        # Degree sums along the unique path from a, excluding a itself.
        acc = {a: 0}
        prev = {a: None}
        todo = [a]
        while todo:
            v = todo.pop()
            for w in nb[v]:
                if w not in acc:
                    acc[w] = acc[v] + len(nb[w])
                    prev[w] = v
                    todo.append(w)
        for b in leaves[i + 1:]:
            s = acc[b] - len(nb[b])
            if s > best:
                best = s
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                best_path = path[::-1]
    return best, best_path


def descent_probability_total(t: RootedTree) -> Fraction:
    """Sum over root-to-leaf paths of 1 / (deg(u0) * prod (deg(u_i) - 1)); exactly 1."""
    if t.degree(t.root) < 2:
        raise ValueError("the root must not be a leaf")
    total = Fraction(0)
    for path in t.root_paths():
        den = t.degree(path[0])
        for v in path[1:-1]:
            den *= t.degree(v) - 1
        total += Fraction(1, den)
    return total


def leaf_path_product_bound_check(t: RootedTree, M: float) -> bool:
    """Every root-to-leaf degree product (leaf excluded) is at most e^(M/e).

    Compared in log space, so the tolerance is relative.
    """
    if t.degree(t.root) < 2:
        raise ValueError("the root must not be a leaf")
    cap = M / math.e + TOLERANCE
    for path in t.root_paths():
        prod = 1
        for v in path[:-1]:
            prod *= t.degree(v)
        if math.log(prod) > cap:
            return False
    return True


def _longer_arc(g: Graph, edges, x: int, y: int) -> list[int]:
    c = cycle_walk(g, edges, x)
    j = c.vertices(g).index(y)
    forward = list(c.edges[:j])
    backward = list(reversed(c.edges[j:]))
    if len(forward) != len(backward):
        return forward if len(forward) > len(backward) else backward
    return forward if min(forward) < min(backward) else backward


def circuit_from_leaf_path(g: Graph, P: PrimitiveSubgraph, leaf_path: Sequence[int]) -> CircuitWitness:
    """Circuit through the two leaf cycles of a block-tree path, taking the long way round.

    Inside every intermediate cycle block the connecting path follows the
    longer arc between the two attachment vertices, so the circuit degree is
    at least half the total size of the blocks on the path.
    """
    d, t = P.decomposition, P.tree
    ends = (leaf_path[0], leaf_path[-1])
    for i in ends:
        b = d.blocks[i]
        if not t.is_leaf(i):
            raise ValueError(f"block {i} is not a leaf of the block tree")
        if b.kind is not BlockKind.CYCLE or len(b.edges) % 2 == 0:
            raise InternalInconsistency(f"leaf block {i} is not an odd cycle")
    attach = [t.shared_vertex(leaf_path[i], leaf_path[i + 1]) for i in range(len(leaf_path) - 1)]
    if len(leaf_path) == 2:
        v = attach[0]
        w = CircuitWitness(
            SHARED_VERTEX,
            (cycle_walk(g, d.blocks[ends[0]].edges, v), cycle_walk(g, d.blocks[ends[1]].edges, v)),
            vertex=v,
        )
    else:
        path = []
        for k in range(1, len(leaf_path) - 1):
            b = d.blocks[leaf_path[k]]
            x, y = attach[k - 1], attach[k]
            if b.kind is BlockKind.CUT_EDGE:
                path += sorted(b.edges)
            else:
                path += _longer_arc(g, b.edges, x, y)
        w = CircuitWitness(
            CYCLES_WITH_PATH,
            (cycle_walk(g, d.blocks[ends[0]].edges, attach[0]), cycle_walk(g, d.blocks[ends[1]].edges, attach[-1])),
            path=tuple(path),
        )
    validate_witness(g, w)
    return w


@dataclass
class BoundReport:
    n: int
    circuit_count: int
    graver_size: int
    max_graver_degree: int
    bound_value: float
    block_count_max: int
    block_count_bound: float
    max_leaf_path_degree_sum: int | None
    leaf_path_cap: int
    max_block_walk_edges: int
    block_walk_edge_cap: int
    max_leaf_path_circuit_degree: int | None
    min_leaf_path_circuit_slack: float | None
    holds: dict = field(default_factory=dict)

    def evaluate(self) -> dict:
        """Recompute every inequality from the stored quantities."""
        return {
            "graver_degree": self.max_graver_degree <= self.bound_value + TOLERANCE,
            "leaf_path_degree_sum": self.max_leaf_path_degree_sum is None
            or self.max_leaf_path_degree_sum <= self.leaf_path_cap,
            "block_count": self.block_count_max <= self.block_count_bound + TOLERANCE,
            "block_walk_edges": self.max_block_walk_edges <= self.block_walk_edge_cap,
            "leaf_path_circuit": self.max_leaf_path_circuit_degree is None
            or (self.max_leaf_path_circuit_degree <= self.n and self.min_leaf_path_circuit_slack >= -TOLERANCE),
        }

    @property
    def ok(self) -> bool:
        return all(self.holds.values()) and all(self.evaluate().values())

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, doc: dict) -> "BoundReport":
        return cls(**doc)


def verify_bound(g: Graph, **caps) -> BoundReport:
    """Compute the circuit-degree bound n and check every Graver element against it.

    ``caps`` may hold ``max_cycles``, ``max_subgraphs`` and ``max_states``.
    """
    cycle_caps = {k: v for k, v in caps.items() if k == "max_cycles"}
    witnesses = enumerate_circuit_witnesses(g, **cycle_caps)
    n = max((witness_degree(w) for w in witnesses), default=0)
    subgraphs = enumerate_primitive_subgraphs(g, **caps)

    max_deg = 0
    max_blocks = 0
    max_block_edges = 0
    max_leaf_sum = None
    max_circ = None
    min_slack = None
    for P in subgraphs:
        max_deg = max(max_deg, graver_degree(P))
        max_blocks = max(max_blocks, P.tree.node_count)
        for b in P.decomposition.blocks:
            max_block_edges = max(max_block_edges, 2 if b.kind is BlockKind.CUT_EDGE else len(b.edges))
        t = P.tree
        if t.node_count < 3:
            continue
        s, _ = leaf_path_degree_sums(t)
        max_leaf_sum = s if max_leaf_sum is None else max(max_leaf_sum, s)
        leaves = t.leaves
        for i, a in enumerate(leaves):
            for b in leaves[i + 1:]:
                lp = _tree_path(t.neighbours, a, b)
                w = circuit_from_leaf_path(g, P, lp)
                deg = witness_degree(w)
                slack = deg - sum(P.decomposition.blocks[k].size for k in lp) / 2
                max_circ = deg if max_circ is None else max(max_circ, deg)
                min_slack = slack if min_slack is None else min(min_slack, slack)

    report = BoundReport(
        n=n,
        circuit_count=len(witnesses),
        graver_size=len(subgraphs),
        max_graver_degree=max_deg,
        bound_value=graver_degree_bound(n) if n else 0.0,
        block_count_max=max_blocks,
        block_count_bound=block_count_bound(n) if n else 0.0,
        max_leaf_path_degree_sum=max_leaf_sum,
        leaf_path_cap=2 * n - 2,
        max_block_walk_edges=max_block_edges,
        block_walk_edge_cap=2 * n,
        max_leaf_path_circuit_degree=max_circ,
        min_leaf_path_circuit_slack=min_slack,
    )
    report.holds = report.evaluate()
    return report
