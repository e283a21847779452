"""Undirected multigraphs, walks, cycles and block decompositions.

Edges are identified by their index in ``Graph.edges``; that index is also
the column of the edge in the incidence matrix and the variable of the edge
in the toric ideal.  Loops and parallel edges are allowed: a loop is a cycle
of length 1 and a pair of parallel edges is a cycle of length 2.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapExceeded, InputError
from .toric_algebra import Binomial, IntegerMatrix

DEFAULT_MAX_CYCLES = 10**6


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex count must be nonnegative")
        for j, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise InputError(f"edge {j} = ({a}, {b}) has an endpoint outside [0, {self.vertex_count})")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(vertex_count, tuple((int(a), int(b)) for a, b in edges))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_loop(self, e: int) -> bool:
        a, b = self.edges[e]
        return a == b

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise InputError(f"edge {e} = ({a}, {b}) is not incident to vertex {v}")

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex; a loop is listed once."""
        inc = [[] for _ in range(self.vertex_count)]
        for j, (a, b) in enumerate(self.edges):
            inc[a].append(j)
            if b != a:
                inc[b].append(j)
        return tuple(tuple(x) for x in inc)

    def edge_vertices(self, edge_ids: Iterable[int]) -> frozenset[int]:
        out = set()
        for e in edge_ids:
            out.update(self.edges[e])
        return frozenset(out)

    def to_text(self) -> str:
        lines = [str(self.vertex_count)] + [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Walk:
    """A walk given by its starting vertex and the edge ids it traverses."""

    edges: tuple[int, ...]
    start: int

    def __len__(self):
        return len(self.edges)

    def vertices(self, g: Graph) -> list[int]:
        """Vertex sequence v_1, ..., v_{k+1}; raises if consecutive edges do not meet."""
        seq = [self.start]
        v = self.start
        for e in self.edges:
            try:
                v = g.other_end(e, v)
            except (InputError, IndexError):
                raise InputError(f"walk breaks at edge {e} (current vertex {v})") from None
            seq.append(v)
        return seq

    def is_closed(self, g: Graph) -> bool:
        return self.vertices(g)[-1] == self.start

    def rotated_to(self, g: Graph, v: int) -> "Walk":
        """The same closed walk started at its first visit of ``v``."""
        seq = self.vertices(g)
        i = seq.index(v)
        return Walk(self.edges[i:] + self.edges[:i], v)

    def reversed(self, g: Graph) -> "Walk":
        seq = self.vertices(g)
        return Walk(tuple(reversed(self.edges)), seq[-1])


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: vertex count, then one ``a b`` pair per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise InputError(f"line {lineno}: expected the vertex count, got {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise InputError(f"line {lineno}: vertex count {parts[0]!r} is not an integer") from None
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex index in {line!r}") from None
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"line {lineno}: vertex index out of range [0, {n})")
        edges.append((a, b))
    if n is None:
        raise InputError("empty graph document (missing vertex count)")
    return Graph(n, tuple(edges))


def incidence_matrix(g: Graph) -> IntegerMatrix:
    """n x m matrix; a loop column holds a single 2."""
    rows = [[0] * g.m for _ in range(g.n)]
    for j, (a, b) in enumerate(g.edges):
        rows[a][j] += 1
        rows[b][j] += 1
    return IntegerMatrix(g.n, g.m, tuple(tuple(r) for r in rows))


def is_connected(g: Graph, edge_ids: Iterable[int] | None = None) -> bool:
    """Connectivity of the subgraph spanned by ``edge_ids`` (isolated vertices ignored)."""
    return len(edge_components(g, edge_ids)) <= 1


def edge_components(g: Graph, edge_ids: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components of an edge-induced subgraph, as edge sets."""
    ids = range(g.m) if edge_ids is None else sorted(set(edge_ids))
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in ids:
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps = defaultdict(set)
    for e in ids:
        comps[find(g.edges[e][0])].add(e)
    return sorted((frozenset(c) for c in comps.values()), key=min)


# -- cycles ------------------------------------------------------------------


def enumerate_simple_cycles(g: Graph, max_cycles: int = DEFAULT_MAX_CYCLES) -> list[Walk]:
    """Every simple cycle once, up to rotation and reflection.

    Loops come out as length-1 cycles and each pair of parallel edges as a
    length-2 cycle.  Longer cycles start at their smallest vertex and are
    oriented so the first edge id is below the last one.
    """
    out: list[Walk] = []

    def emit(w):
        if len(out) >= max_cycles:
            raise CapExceeded("simple cycles", max_cycles)
        out.append(w)

    for e, (a, b) in enumerate(g.edges):
        if a == b:
            emit(Walk((e,), a))
    parallel = defaultdict(list)
    for e, (a, b) in enumerate(g.edges):
        if a != b:
            parallel[(min(a, b), max(a, b))].append(e)
    for (a, _b), ids in sorted(parallel.items()):
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                emit(Walk((ids[i], ids[j]), a))

    # Cycles of length >= 3, rooted at their minimum vertex s.
    for s in range(g.n):
        on_path = {s}
        path_edges: list[int] = []

        def extend(v):
            for e in g.incident[v]:
                if g.is_loop(e):
                    continue
                w = g.other_end(e, v)
                if w == s:
                    if len(path_edges) >= 2 and path_edges[0] < e:
                        emit(Walk(tuple(path_edges) + (e,), s))
                    continue
                if w < s or w in on_path:
                    continue
                on_path.add(w)
                path_edges.append(e)
                extend(w)
                path_edges.pop()
                on_path.discard(w)

        extend(s)
    return out


# -- blocks --------------------------------------------------------------------


class BlockKind(str, enum.Enum):
    CYCLE = "cycle"
    CUT_EDGE = "cut_edge"
    OTHER = "other"


@dataclass(frozen=True)
class Block:
    edges: frozenset[int]
    vertices: frozenset[int]
    kind: BlockKind

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    cut_edges: frozenset[int]

    @property
    def block_size(self) -> list[int]:
        return [b.size for b in self.blocks]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def to_json(self) -> list[dict]:
        return [{"edges": sorted(b.edges), "kind": b.kind.value} for b in self.blocks]


def _classify(g: Graph, edges: frozenset[int], vertices: frozenset[int]) -> BlockKind:
    if len(edges) == 1 and len(vertices) == 2:
        return BlockKind.CUT_EDGE
    # A biconnected block with as many edges as vertices is 2-regular, hence one cycle.
    if len(edges) == len(vertices):
        return BlockKind.CYCLE
    return BlockKind.OTHER


def blocks(g: Graph, edge_ids: Iterable[int] | None = None) -> BlockDecomposition:
    """Biconnected components of ``g`` (or of the subgraph spanned by ``edge_ids``).

    Each loop is a block on its own.  A cut vertex is a vertex lying in two
    or more blocks; for loopless graphs this is exactly the vertices whose
    deletion disconnects their component.
    """
    ids = sorted(set(range(g.m) if edge_ids is None else edge_ids))
    adj = defaultdict(list)
    found: list[frozenset[int]] = []
    for e in ids:
        a, b = g.edges[e]
        if a == b:
            found.append(frozenset((e,)))
        else:
            adj[a].append((b, e))
            adj[b].append((a, e))

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[int] = []
        # Iterative DFS; frames hold (vertex, edge used to enter it, neighbour iterator).
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(e)
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        f = edge_stack.pop()
                        comp.add(f)
                        if f == via:
                            break
                    found.append(frozenset(comp))

    found.sort(key=min)
    out = []
    membership = defaultdict(int)
    for es in found:
        vs = g.edge_vertices(es)
        for v in vs:
            membership[v] += 1
        out.append(Block(es, vs, _classify(g, es, vs)))
    cut_vertices = frozenset(v for v, k in membership.items() if k >= 2)
    cut_edges = frozenset(min(b.edges) for b in out if b.kind is BlockKind.CUT_EDGE)
    return BlockDecomposition(tuple(out), cut_vertices, cut_edges)


@dataclass(frozen=True)
class BlockTree:
    """Block graph: one node per block, adjacent when two blocks share a vertex."""

    node_count: int
    adjacency: tuple[tuple[int, int], ...]
    shared: dict = field(compare=False, repr=False)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        nb = [[] for _ in range(self.node_count)]
        for i, j in self.adjacency:
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(sorted(x)) for x in nb)

    @property
    def nodes(self) -> range:
        return range(self.node_count)

    def degree(self, i: int) -> int:
        return len(self.neighbours[i])

    @property
    def leaves(self) -> list[int]:
        return [i for i in self.nodes if self.degree(i) == 1]

    def is_leaf(self, i: int) -> bool:
        return self.degree(i) == 1

    def shared_vertex(self, i: int, j: int) -> int:
        return self.shared[(min(i, j), max(i, j))]

    def is_tree(self) -> bool:
        if self.node_count == 0:
            return True
        if len(self.adjacency) != self.node_count - 1:
            return False
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for j in self.neighbours[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == self.node_count


def block_tree(d: BlockDecomposition) -> BlockTree:
    """Block graph of a connected decomposition.

    It is a tree exactly when no vertex lies in three or more blocks.
    """
    shared = {}
    at = defaultdict(list)
    for i, b in enumerate(d.blocks):
        for v in b.vertices:
            at[v].append(i)
    for v in sorted(at):
        bs = at[v]
        for x in range(len(bs)):
            for y in range(x + 1, len(bs)):
                key = (bs[x], bs[y])
                if key in shared:
                    raise AssertionError(f"blocks {key} share more than one vertex")
                shared[key] = v
    t = BlockTree(len(d.blocks), tuple(sorted(shared)), shared)
    if t.node_count:
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for j in t.neighbours[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        if len(seen) != t.node_count:
            raise InputError("block tree requested for a disconnected graph")
    return t


def cycle_walk(g: Graph, edge_ids: Iterable[int], start: int | None = None) -> Walk:
    """Order the edges of a single cycle into a closed walk starting at ``start``."""
    es = sorted(set(edge_ids))
    if not es:
        raise InputError("empty cycle")
    if start is None:
        start = min(g.edge_vertices(es))
    if len(es) == 1:
        a, b = g.edges[es[0]]
        if a != b or a != start:
            raise InputError(f"edge {es[0]} is not a loop at {start}")
        return Walk((es[0],), start)
    remaining = set(es)
    seq = []
    v = start
    while remaining:
        nxt = [e for e in g.incident[v] if e in remaining]
        if not nxt:
            raise InputError(f"edges {es} do not form a cycle through {start}")
        e = min(nxt)
        remaining.discard(e)
        seq.append(e)
        v = g.other_end(e, v)
    if v != start:
        raise InputError(f"edges {es} do not close up into a cycle")
    return Walk(tuple(seq), start)


# -- walk binomials -------------------------------------------------------------


def walk_binomial(g: Graph, w: Walk) -> Binomial:
    """B_w: edges in odd positions (1st, 3rd, ...) go to plus, the rest to minus.

    Exponents are raw occurrence counts; an edge seen on both sides is left
    uncancelled so that callers can detect it.
    """
    if len(w) % 2:
        raise InputError(f"walk of odd length {len(w)}")
    if not w.is_closed(g):
        raise InputError("walk is not closed")
    plus = [0] * g.m
    minus = [0] * g.m
    for i, e in enumerate(w.edges):
        if i % 2 == 0:
            plus[e] += 1
        else:
            minus[e] += 1
    return Binomial(tuple(plus), tuple(minus))
