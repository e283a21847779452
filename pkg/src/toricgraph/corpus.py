"""Reproducible graph and tree corpora for cross-checks and acceptance runs."""

from __future__ import annotations

import random

from .graph_core import Graph

DEFAULT_SEED = 20240101


def small_connected_graphs(max_vertices: int = 6, max_edges: int = 9) -> list[tuple[str, Graph]]:
    """Every connected simple graph with at least one edge, one per isomorphism class.

    Taken from the networkx graph atlas (all graphs on up to seven vertices).
    """
    import networkx as nx

    if max_vertices > 7:
        raise ValueError("the graph atlas only covers graphs on up to 7 vertices")
    out = []
    for idx, G in enumerate(nx.graph_atlas_g()):
        n, m = G.number_of_nodes(), G.number_of_edges()
        if n > max_vertices or m == 0 or m > max_edges or not nx.is_connected(G):
            continue
        edges = sorted((min(a, b), max(a, b)) for a, b in G.edges())
        out.append((f"atlas-{idx}", Graph.from_edges(n, edges)))
    return out


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    a, b = [u for u in range(n) if degree[u] == 1]
    edges.append((a, b))
    return edges


def random_multigraph(
    rng: random.Random,
    n: int,
    m: int,
    p_loop: float = 0.15,
    p_parallel: float = 0.2,
) -> Graph:
    """Connected multigraph: a random spanning tree plus ``m - n + 1`` extra edges.

    Each extra edge is a loop with probability ``p_loop``, a copy of an
    existing edge with probability ``p_parallel``, and a uniform vertex pair
    otherwise.
    """
    if m < n - 1:
        raise ValueError(f"{m} edges cannot connect {n} vertices")
    edges = random_tree_edges(rng, n)
    while len(edges) < m:
        r = rng.random()
        if r < p_loop:
            v = rng.randrange(n)
            edges.append((v, v))
        elif r < p_loop + p_parallel and any(a != b for a, b in edges):
            edges.append(rng.choice([e for e in edges if e[0] != e[1]]))
        else:
            edges.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(edges)
    return Graph.from_edges(n, edges)


def random_multigraphs(
    count: int,
    seed: int = DEFAULT_SEED,
    max_vertices: int = 7,
    max_edges: int = 10,
    p_loop: float = 0.15,
    p_parallel: float = 0.2,
) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, max_vertices)
        m = rng.randint(n - 1, max_edges)
        out.append((f"random-{seed}-{i}", random_multigraph(rng, n, m, p_loop, p_parallel)))
    return out


def acceptance_corpus(seed: int = DEFAULT_SEED, random_count: int = 200) -> list[tuple[str, Graph]]:
    return small_connected_graphs() + random_multigraphs(random_count, seed)


def random_trees(count: int, seed: int = DEFAULT_SEED, min_vertices: int = 3, max_vertices: int = 50):
    """``count`` seeded random trees as (vertex count, edge list) pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_vertices, max_vertices)
        out.append((n, random_tree_edges(rng, n)))
    return out
