import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from toricgraph.corpus import random_multigraph
from toricgraph.errors import CapExceeded, InputError
from toricgraph.graph_core import (
    BlockKind,
    Graph,
    Walk,
    block_tree,
    blocks,
    edge_components,
    enumerate_simple_cycles,
    incidence_matrix,
    parse_graph,
    walk_binomial,
)
from toricgraph.toric_algebra import a_degree, in_kernel

from conftest import BOWTIE, C4, K4, PATH3, TREE, TRI_BRIDGE


def brute_force_cycle_sets(g):
    """Edge sets forming a connected 2-regular subgraph (a loop adds 2 to its vertex)."""
    out = set()
    for r in range(1, g.m + 1):
        for sub in itertools.combinations(range(g.m), r):
            deg = {}
            for e in sub:
                a, b = g.edges[e]
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if all(d == 2 for d in deg.values()) and len(edge_components(g, sub)) == 1:
                out.add(frozenset(sub))
    return out


multigraphs = st.builds(
    lambda seed, n, extra: random_multigraph(random.Random(seed), n, n - 1 + extra, 0.2, 0.25),
    st.integers(0, 10**6),
    st.integers(1, 6),
    st.integers(0, 5),
)


def test_parse_examples():
    g = parse_graph("4\n0 1\n1 2\n2 3\n3 0")
    assert g == C4
    loop = parse_graph("1\n0 0")
    assert loop.edges == ((0, 0),) and loop.is_loop(0)
    par = parse_graph("3\n0 1\n0 1")
    assert par.edges == ((0, 1), (0, 1))


def test_parse_skips_comments_and_blanks():
    g = parse_graph("# a comment\n3\n\n0 1\n  # another\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "x\n0 1", "3\n0 1 2", "3\n0 3", "3\n0 -1", "2\n0 a", "2 2\n0 1"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_incidence_matrix():
    A = incidence_matrix(C4)
    assert A.columns() == [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)]
    assert incidence_matrix(Graph(1, ((0, 0),))).columns() == [(2,)]
    empty = incidence_matrix(Graph(2, ()))
    assert (empty.rows, empty.cols, empty.entries) == (2, 0, ((), ()))


def test_blocks_examples():
    d = blocks(BOWTIE)
    assert [b.kind for b in d.blocks] == [BlockKind.CYCLE, BlockKind.CYCLE]
    assert d.cut_vertices == {2}
    d = blocks(PATH3)
    assert [b.kind for b in d.blocks] == [BlockKind.CUT_EDGE] * 2
    assert d.cut_vertices == {1} and d.cut_edges == {0, 1}
    d = blocks(K4)
    assert len(d.blocks) == 1 and d.blocks[0].kind is BlockKind.OTHER


def test_blocks_multigraph_kinds():
    g = Graph.from_edges(2, [(0, 0), (0, 1), (0, 1), (1, 1)])
    d = blocks(g)
    assert sorted((sorted(b.edges), b.kind.value, b.size) for b in d.blocks) == [
        ([0], "cycle", 1),
        ([1, 2], "cycle", 2),
        ([3], "cycle", 1),
    ]
    assert d.cut_vertices == {0, 1}


def _nx_graph(g, subdivide_loops=False):
    h = nx.MultiGraph()
    h.add_nodes_from(v for e in g.edges for v in e)
    for j, (a, b) in enumerate(g.edges):
        if a == b and subdivide_loops:
            # a loop hangs off its vertex like a separate piece
            h.add_edge(a, ("loop", j))
            h.add_edge(("loop", j), a)
        else:
            h.add_edge(a, b, key=j)
    return h


@settings(max_examples=150, deadline=None)
@given(multigraphs)
def test_blocks_partition_and_cut_property(g):
    d = blocks(g)
    seen = [e for b in d.blocks for e in b.edges]
    assert sorted(seen) == list(range(g.m))
    for b in d.blocks:
        if b.kind is BlockKind.CUT_EDGE:
            assert len(b.edges) == 1
        if b.kind is BlockKind.CYCLE:
            assert len(b.edges) == b.size
    h = _nx_graph(g, subdivide_loops=True)
    base = nx.number_connected_components(h)
    for v in d.cut_vertices:
        k = h.copy()
        k.remove_node(v)
        assert nx.number_connected_components(k) > base
    h = _nx_graph(g)
    for e in d.cut_edges:
        k = h.copy()
        k.remove_edge(*g.edges[e], key=e)
        assert nx.number_connected_components(k) == nx.number_connected_components(h) + 1


def test_block_tree_examples():
    t = block_tree(blocks(BOWTIE))
    assert t.node_count == 2 and len(t.adjacency) == 1
    t = block_tree(blocks(TRI_BRIDGE))
    assert t.node_count == 3 and len(t.adjacency) == 2 and t.is_tree()
    assert sorted(t.degree(i) for i in t.nodes) == [1, 1, 2]
    t = block_tree(blocks(C4))
    assert t.node_count == 1 and t.adjacency == ()


def test_block_tree_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError):
        block_tree(blocks(g))


@settings(max_examples=100, deadline=None)
@given(multigraphs)
def test_block_tree_is_tree_when_cut_vertices_have_two_blocks(g):
    d = blocks(g)
    t = block_tree(d)
    for i, j in t.adjacency:
        assert len(d.blocks[i].vertices & d.blocks[j].vertices) == 1
    if t.node_count and all(len(d.blocks_at(v)) == 2 for v in d.cut_vertices):
        assert len(t.adjacency) == t.node_count - 1 and t.is_tree()


def test_simple_cycles_examples():
    assert len(enumerate_simple_cycles(C4)) == 1
    assert len(enumerate_simple_cycles(C4)[0]) == 4
    assert enumerate_simple_cycles(TREE) == []
    cyc = enumerate_simple_cycles(K4)
    assert len(cyc) == len(brute_force_cycle_sets(K4)) == 7
    assert sorted(len(c) for c in cyc) == [3, 3, 3, 3, 4, 4, 4]


def test_simple_cycles_cap():
    with pytest.raises(CapExceeded):
        enumerate_simple_cycles(K4, max_cycles=5)


@settings(max_examples=150, deadline=None)
@given(multigraphs)
def test_simple_cycles_match_brute_force(g):
    cyc = enumerate_simple_cycles(g)
    sets = [frozenset(c.edges) for c in cyc]
    assert len(sets) == len(set(sets))
    assert set(sets) == brute_force_cycle_sets(g)
    for c in cyc:
        assert c.is_closed(g)


def test_walk_binomial_four_cycle():
    b = walk_binomial(C4, Walk((0, 1, 2, 3), 0))
    assert b.plus == (1, 0, 1, 0) and b.minus == (0, 1, 0, 1)


def test_walk_binomial_bridge_exponent():
    w = Walk((2, 0, 1, 3, 4, 5, 6, 3), 2)
    b = walk_binomial(TRI_BRIDGE, w)
    assert in_kernel(incidence_matrix(TRI_BRIDGE), b)
    assert (b.plus[3], b.minus[3]) in {(2, 0), (0, 2)}


def test_walk_binomial_errors():
    with pytest.raises(InputError):
        walk_binomial(C4, Walk((0, 1, 2), 0))
    with pytest.raises(InputError):
        walk_binomial(C4, Walk((0, 1), 0))
    with pytest.raises(InputError):
        walk_binomial(C4, Walk((0, 2), 0))


@settings(max_examples=100, deadline=None)
@given(multigraphs, st.data())
def test_closed_even_walks_balance(g, data):
    # random closed walk: go out along a random walk and come back the same way
    if g.m == 0:
        return
    A = incidence_matrix(g)
    v = data.draw(st.integers(0, g.n - 1))
    if not g.incident[v]:
        return
    path = []
    cur = v
    for _ in range(data.draw(st.integers(1, 6))):
        e = data.draw(st.sampled_from(g.incident[cur]))
        path.append(e)
        cur = g.other_end(e, cur)
    w = Walk(tuple(path + path[::-1]), v)
    b = walk_binomial(g, w)
    assert a_degree(A, b.plus) == a_degree(A, b.minus)
