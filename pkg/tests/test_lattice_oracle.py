import itertools
import random
from fractions import Fraction

import pytest

from toricgraph.errors import CapExceeded
from toricgraph.graph_core import Graph, incidence_matrix
from toricgraph.lattice_oracle import (
    circuits_of_matrix,
    graver_basis,
    integer_kernel_basis,
    normal_form,
    rational_rank,
)
from toricgraph.toric_algebra import (
    Binomial,
    IntegerMatrix,
    binomial_from_kernel_vector,
    dominates,
    in_kernel,
    is_primitive_in_set,
    support,
)

from conftest import BOWTIE, C4, K4, TRI_BRIDGE, TRIANGLE


def box_kernel(A, bound):
    """All nonzero kernel vectors with entries in [-bound, bound]."""
    return [
        v
        for v in itertools.product(range(-bound, bound + 1), repeat=A.cols)
        if any(v) and not any(A.times(v))
    ]


def box_primitive(A, bound):
    """Kernel vectors in the box not conformally above another nonzero one.

    The box is closed under going conformally down, so this is exactly the
    Graver basis restricted to the box.
    """
    vecs = box_kernel(A, bound)

    def below(u, v):
        return u != v and all(x * y >= 0 and abs(x) <= abs(y) for x, y in zip(u, v))

    return {
        binomial_from_kernel_vector(v).canonical()
        for v in vecs
        if not any(below(u, v) for u in vecs)
    }


def in_integer_span(basis, v):
    """Solve basis^T c = v over Q and check the coefficients are integers."""
    k = len(basis)
    m = len(v)
    rows = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(m)]
    r = 0
    piv = []
    for c in range(k):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    if any(rows[i][k] for i in range(r, m)):
        return False
    return all(rows[i][k].denominator == 1 for i in range(r))


def test_kernel_examples():
    lat = integer_kernel_basis(incidence_matrix(C4))
    assert lat.rank == 1
    assert lat.basis[0] in {(1, -1, 1, -1), (-1, 1, -1, 1)}
    assert integer_kernel_basis(incidence_matrix(TRIANGLE)).rank == 0
    assert integer_kernel_basis(IntegerMatrix(2, 0, ((), ()))).rank == 0


def test_kernel_saturated_on_random_matrices():
    rng = random.Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 2), rng.randint(2, 4)
        A = IntegerMatrix.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        lat = integer_kernel_basis(A)
        assert lat.rank == cols - rational_rank(A.entries)
        for b in lat.basis:
            assert not any(A.times(b))
        for v in box_kernel(A, 3):
            assert in_integer_span(lat.basis, v), (A, v)


def test_saturation_needs_more_than_rational_kernel():
    # kernel of (2, 4) is spanned by (2, -1); a rational basis scaled badly would miss it
    lat = integer_kernel_basis(IntegerMatrix.from_rows([[2, 4]]))
    assert lat.basis in {((2, -1),), ((-2, 1),)}


def test_graver_four_cycle_and_triangle():
    assert graver_basis(incidence_matrix(C4)) == {Binomial((1, 0, 1, 0), (0, 1, 0, 1))}
    assert graver_basis(incidence_matrix(TRIANGLE)) == frozenset()


def test_graver_triangles_with_bridge_matches_box_search():
    A = incidence_matrix(TRI_BRIDGE)
    G = graver_basis(A)
    assert G == box_primitive(A, 2)
    (b,) = G
    assert b.degree == 4
    assert 2 in (b.plus[3], b.minus[3])


@pytest.mark.parametrize("seed", range(12))
def test_graver_random_matrices_match_box_search(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 2), rng.randint(3, 4)
    A = IntegerMatrix.from_rows([[rng.randint(0, 3) for _ in range(cols)] for _ in range(rows)])
    G = graver_basis(A)
    for b in G:
        assert in_kernel(A, b) and b.is_irreducible()
    bound = 4
    inside = {b for b in G if max(b.plus + b.minus) <= bound}
    assert inside == box_primitive(A, bound)


def test_graver_pairwise_non_dominance(k4):
    G = graver_basis(incidence_matrix(k4))
    for a in G:
        for b in G:
            if a != b:
                assert not dominates(a, b)
        assert is_primitive_in_set(a, G)


def test_graver_cap():
    with pytest.raises(CapExceeded):
        graver_basis(incidence_matrix(K4), max_elements=1)
    with pytest.raises(CapExceeded):
        graver_basis(incidence_matrix(K4), max_pairs=1)


def test_circuits_examples():
    assert circuits_of_matrix(incidence_matrix(C4)) == {Binomial((1, 0, 1, 0), (0, 1, 0, 1))}
    ck4 = circuits_of_matrix(incidence_matrix(K4))
    assert len(ck4) == 3 and all(b.degree == 2 for b in ck4)
    assert circuits_of_matrix(incidence_matrix(TRIANGLE)) == frozenset()
    (bow,) = circuits_of_matrix(incidence_matrix(BOWTIE))
    assert bow.degree == 3


@pytest.mark.parametrize("g", [C4, K4, BOWTIE, TRI_BRIDGE, Graph.from_edges(2, [(0, 0), (0, 1), (0, 1), (1, 1)])])
def test_circuits_are_graver_and_support_minimal(g):
    A = incidence_matrix(g)
    C = circuits_of_matrix(A)
    G = graver_basis(A)
    assert C <= G
    for c in C:
        for other in G:
            assert not support(other) < support(c)


def test_normal_form_examples():
    G = graver_basis(incidence_matrix(C4))
    assert normal_form((0, 0, 0, 0), G) == (0, 0, 0, 0)
    assert normal_form((1, -1, 1, -1), G) == (0, 0, 0, 0)
    assert normal_form((2, -2, 2, -2), G) == (0, 0, 0, 0)
    assert normal_form((-1, 1, -1, 1), G) == (0, 0, 0, 0)
    # not a kernel vector: nothing applies
    assert normal_form((1, 0, 0, 0), G) == (1, 0, 0, 0)


def test_normal_form_completeness_random(k4):
    A = incidence_matrix(k4)
    G = graver_basis(A)
    basis = integer_kernel_basis(A).basis
    rng = random.Random(3)
    for _ in range(200):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        v = tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(A.cols))
        assert not any(normal_form(v, G))
