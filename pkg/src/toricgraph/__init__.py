"""Circuits and Graver bases of toric ideals of graphs.

Graph-side enumeration (``graph_circuits``, ``graph_graver``) is checked
against a matrix-level oracle (``lattice_oracle``), and ``bound`` verifies
the exponential Graver-degree bound in terms of the largest circuit degree.
"""

from .errors import CapExceeded, InputError, InternalInconsistency
from .graph_core import Graph, Walk, blocks, block_tree, enumerate_simple_cycles, incidence_matrix, parse_graph, walk_binomial
from .toric_algebra import Binomial, IntegerMatrix
from .lattice_oracle import circuits_of_matrix, graver_basis, integer_kernel_basis, normal_form
from .graph_circuits import enumerate_circuit_witnesses, max_circuit_degree
from .graph_graver import enumerate_primitive_subgraphs, graver_basis_graph, primitive_walk
from .bound import verify_bound

__all__ = [
    "Binomial",
    "CapExceeded",
    "Graph",
    "InputError",
    "IntegerMatrix",
    "InternalInconsistency",
    "Walk",
    "block_tree",
    "blocks",
    "circuits_of_matrix",
    "enumerate_circuit_witnesses",
    "enumerate_primitive_subgraphs",
    "enumerate_simple_cycles",
    "graver_basis",
    "graver_basis_graph",
    "incidence_matrix",
    "integer_kernel_basis",
    "max_circuit_degree",
    "normal_form",
    "parse_graph",
    "primitive_walk",
    "verify_bound",
    "walk_binomial",
]
