import itertools

import pytest

from toricgraph.graph_core import Graph


C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
# two triangles joined by the bridge e3 = (2, 3)
TRI_BRIDGE = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
K4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
PATH3 = Graph.from_edges(3, [(0, 1), (1, 2)])
TREE = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
SQUARE_BOWTIE = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


@pytest.fixture
def c4():
    return C4


@pytest.fixture
def tri_bridge():
    return TRI_BRIDGE


@pytest.fixture
def bowtie():
    return BOWTIE


@pytest.fixture
def k4():
    return K4


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
