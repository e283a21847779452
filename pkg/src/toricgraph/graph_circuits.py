"""Circuits of the toric ideal of a graph, read off the graph itself.

A circuit is the binomial of one of three closed walks: an even cycle; two
odd cycles meeting in exactly one vertex; or two vertex-disjoint odd cycles
joined by a path that touches each cycle only at its endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, InputError
from .graph_core import DEFAULT_MAX_CYCLES, Graph, Walk, enumerate_simple_cycles, walk_binomial
from .toric_algebra import Binomial

EVEN_CYCLE = "even_cycle"
SHARED_VERTEX = "shared_vertex"
CYCLES_WITH_PATH = "cycles_with_path"

DEFAULT_MAX_PATHS = 10**6


@dataclass(frozen=True)
class CircuitWitness:
    shape: str
    cycles: tuple[Walk, ...]
    path: tuple[int, ...] = ()
    vertex: int | None = None

    @property
    def degree(self) -> int:
        return witness_degree(self)

    @property
    def edges(self) -> frozenset[int]:
        out = set(self.path)
        for c in self.cycles:
            out.update(c.edges)
        return frozenset(out)

    def to_json(self, g: Graph) -> dict:
        return {
            "shape": self.shape,
            "cycles": [list(c.edges) for c in self.cycles],
            "path": list(self.path),
            "degree": self.degree,
            "binomial": witness_binomial(g, self).to_json(),
        }


def witness_degree(w: CircuitWitness) -> int:
    if w.shape == EVEN_CYCLE:
        return len(w.cycles[0]) // 2
    c1, c2 = (len(c) for c in w.cycles)
    return (c1 + c2) // 2 + len(w.path)


def _path_vertices(g: Graph, path, start) -> list[int]:
    return Walk(tuple(path), start).vertices(g)


def _path_start(g: Graph, w: CircuitWitness) -> int:
    on_first = set(w.cycles[0].vertices(g))
    a, b = g.edges[w.path[0]]
    if a in on_first:
        return a
    if b in on_first:
        return b
    raise InputError("path does not start on the first cycle")


def validate_witness(g: Graph, w: CircuitWitness) -> None:
    """Raise ``InputError`` unless ``w`` has one of the three circuit shapes."""

    def cycle_ok(c: Walk):
        seq = c.vertices(g)
        if seq[-1] != seq[0] or len(set(seq[:-1])) != len(c) or len(set(c.edges)) != len(c):
            raise InputError(f"{c} is not a simple cycle")
        return set(seq[:-1])

    if w.shape == EVEN_CYCLE:
        if len(w.cycles) != 1 or w.path:
            raise InputError("even-cycle witness needs exactly one cycle and no path")
        cycle_ok(w.cycles[0])
        if len(w.cycles[0]) % 2:
            raise InputError("even-cycle witness has an odd cycle")
        return
    if len(w.cycles) != 2:
        raise InputError("two cycles required")
    c1, c2 = w.cycles
    v1, v2 = cycle_ok(c1), cycle_ok(c2)
    if len(c1) % 2 == 0 or len(c2) % 2 == 0:
        raise InputError("both cycles must be odd")
    if set(c1.edges) & set(c2.edges):
        raise InputError("cycles share an edge")
    common = v1 & v2
    if w.shape == SHARED_VERTEX:
        if w.path or common != {w.vertex}:
            raise InputError(f"cycles must meet exactly in vertex {w.vertex}, they meet in {sorted(common)}")
        return
    if w.shape != CYCLES_WITH_PATH:
        raise InputError(f"unknown witness shape {w.shape!r}")
    if common:
        raise InputError("cycles of a path witness must be vertex-disjoint")
    if not w.path:
        raise InputError("path witness with an empty path")
    seq = _path_vertices(g, w.path, _path_start(g, w))
    if len(set(seq)) != len(seq):
        raise InputError("connecting path is not simple")
    if seq[-1] not in v2:
        raise InputError("path does not end on the second cycle")
    if set(seq[1:-1]) & (v1 | v2):
        raise InputError("path interior touches a cycle")


def witness_to_walk(g: Graph, w: CircuitWitness) -> Walk:
    """Closed even walk realising the circuit; path edges are traversed twice."""
    if w.shape == EVEN_CYCLE:
        return w.cycles[0]
    c1, c2 = w.cycles
    if w.shape == SHARED_VERTEX:
        a = c1.rotated_to(g, w.vertex)
        b = c2.rotated_to(g, w.vertex)
        return Walk(a.edges + b.edges, w.vertex)
    x = _path_start(g, w)
    y = _path_vertices(g, w.path, x)[-1]
    a = c1.rotated_to(g, x)
    b = c2.rotated_to(g, y)
    return Walk(a.edges + tuple(w.path) + b.edges + tuple(reversed(w.path)), x)


def witness_binomial(g: Graph, w: CircuitWitness) -> Binomial:
    return walk_binomial(g, witness_to_walk(g, w)).canonical()


def _connecting_paths(g: Graph, source: set[int], target: set[int], cap: int):
    """Simple paths from a vertex of ``source`` to one of ``target``, interior avoiding both."""
    found = []
    blocked = source | target
    for s in sorted(source):
        visited = {s}
        stack_edges: list[int] = []

        def extend(v):
            for e in g.incident[v]:
                if g.is_loop(e):
                    continue
                u = g.other_end(e, v)
                if u in visited:
                    continue
                if u in target:
                    if len(found) >= cap:
                        raise CapExceeded("connecting paths", cap)
                    found.append(tuple(stack_edges) + (e,))
                    continue
                if u in blocked:
                    continue
                visited.add(u)
                stack_edges.append(e)
                extend(u)
                stack_edges.pop()
                visited.discard(u)

        extend(s)
    return found


def enumerate_circuit_witnesses(
    g: Graph,
    max_cycles: int = DEFAULT_MAX_CYCLES,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> list[CircuitWitness]:
    """One witness per circuit of the toric ideal of ``g``, deduplicated by binomial."""
    cycles = enumerate_simple_cycles(g, max_cycles)
    out: list[CircuitWitness] = []
    seen: set[Binomial] = set()

    def emit(w):
        b = witness_binomial(g, w)
        if b not in seen:
            seen.add(b)
            out.append(w)

    for c in cycles:
        if len(c) % 2 == 0:
            emit(CircuitWitness(EVEN_CYCLE, (c,)))
    odd = [(c, set(c.vertices(g))) for c in cycles if len(c) % 2]
    budget = max_paths
    for i in range(len(odd)):
        c1, v1 = odd[i]
        for j in range(i + 1, len(odd)):
            c2, v2 = odd[j]
            if set(c1.edges) & set(c2.edges):
                continue
            common = v1 & v2
            if len(common) == 1:
                emit(CircuitWitness(SHARED_VERTEX, (c1, c2), vertex=next(iter(common))))
            elif not common:
                paths = _connecting_paths(g, v1, v2, budget)
                budget -= len(paths)
                for p in paths:
                    emit(CircuitWitness(CYCLES_WITH_PATH, (c1, c2), path=p))
    return out


def max_circuit_degree(g: Graph, witnesses: list[CircuitWitness] | None = None) -> int:
    """Largest circuit degree of the toric ideal of ``g``; 0 when there are no circuits."""
    if witnesses is None:
        witnesses = enumerate_circuit_witnesses(g)
    return max((witness_degree(w) for w in witnesses), default=0)


def circuits_of_graph(g: Graph, **caps) -> frozenset[Binomial]:
    return frozenset(witness_binomial(g, w) for w in enumerate_circuit_witnesses(g, **caps))
