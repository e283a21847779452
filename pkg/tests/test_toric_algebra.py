import pytest
from hypothesis import given, strategies as st

from toricgraph.graph_core import incidence_matrix
from toricgraph.toric_algebra import (
    Binomial,
    IntegerMatrix,
    a_degree,
    binomial_from_kernel_vector,
    dominates,
    in_kernel,
    is_primitive_in_set,
    sorted_binomials,
    support,
)

from conftest import C4

vectors = st.lists(st.integers(-5, 5), min_size=1, max_size=8)


def B(plus, minus):
    return Binomial(tuple(plus), tuple(minus))


def test_a_degree():
    A = incidence_matrix(C4)
    assert a_degree(A, (1, 0, 1, 0)) == (1, 1, 1, 1)
    assert a_degree(A, (0, 0, 0, 0)) == (0, 0, 0, 0)
    assert a_degree(IntegerMatrix.from_rows([[2]]), (3,)) == (6,)
    with pytest.raises(ValueError):
        a_degree(A, (1, 0))


def test_binomial_from_kernel_vector():
    b = binomial_from_kernel_vector((1, -1, 1, -1))
    assert b == B((1, 0, 1, 0), (0, 1, 0, 1))
    z = binomial_from_kernel_vector((0, 0))
    assert z.is_zero()
    assert binomial_from_kernel_vector((2, -1, -1)) == B((2, 0, 0), (0, 1, 1))


@given(vectors)
def test_kernel_vector_round_trip(v):
    b = binomial_from_kernel_vector(v)
    assert b.vector() == tuple(v)
    assert b.is_irreducible()
    assert binomial_from_kernel_vector(b.vector()) == b


def test_in_kernel():
    A = incidence_matrix(C4)
    assert in_kernel(A, B((1, 0, 1, 0), (0, 1, 0, 1)))
    assert not in_kernel(A, B((1, 0, 0, 0), (0, 1, 0, 0)))
    assert in_kernel(A, B((3, 1, 0, 2), (3, 1, 0, 2)))


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4), st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_in_kernel_swap_invariant(p, q):
    A = incidence_matrix(C4)
    b = B(p, q)
    assert in_kernel(A, b) == in_kernel(A, b.swapped())


def test_dominates():
    b = B((1, 0), (0, 1))
    assert dominates(b, b)
    assert dominates(b, B((2, 0), (0, 2)))
    assert dominates(b, B((0, 1), (1, 0)))
    assert not dominates(B((2, 0), (0, 2)), b)


@given(vectors, vectors, vectors)
def test_dominates_transitive(u, v, w):
    k = min(len(u), len(v), len(w))
    b1, b2, b3 = (binomial_from_kernel_vector(x[:k]) for x in (u, v, w))
    # fixed orientation: b1 <= b2 <= b3 side by side
    lo = B([min(a, b) for a, b in zip(b1.plus, b2.plus)], [min(a, b) for a, b in zip(b1.minus, b2.minus)])
    hi = B([max(a, b) for a, b in zip(b2.plus, b3.plus)], [max(a, b) for a, b in zip(b2.minus, b3.minus)])
    assert dominates(lo, b2) and dominates(b2, hi) and dominates(lo, hi)


def test_is_primitive_in_set():
    g = B((1, 0, 1, 0), (0, 1, 0, 1))
    assert is_primitive_in_set(g, {g})
    square = B((2, 0, 2, 0), (0, 2, 0, 2))
    assert not is_primitive_in_set(square, {g, square})


def test_support():
    assert support(B((1, 0, 1, 0), (0, 1, 0, 1))) == {0, 1, 2, 3}
    assert support(B((0, 0), (0, 0))) == frozenset()
    assert support(B((2, 0, 0, 0), (0, 0, 0, 1))) == {0, 3}


def test_canonical_sign_and_sorting():
    b = B((0, 1, 0, 1), (1, 0, 1, 0))
    assert b.canonical() == B((1, 0, 1, 0), (0, 1, 0, 1))
    assert b.canonical().canonical() == b.canonical()
    out = sorted_binomials([B((0, 1), (1, 0)), B((0, 0), (0, 0)), B((1, 0), (0, 2))])
    assert out == [B((0, 0), (0, 0)), B((1, 0), (0, 1)), B((1, 0), (0, 2))]


def test_json_round_trips():
    b = B((2, 0, 1), (0, 3, 0))
    assert Binomial.from_json(b.to_json()) == b
    A = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert IntegerMatrix.from_json(A.to_json()) == A
    assert A.to_json() == {"rows": 2, "cols": 2, "entries": [[1, 2], [3, 4]]}


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        IntegerMatrix(1, 2, ((1, 2.5),))
    with pytest.raises(ValueError):
        Binomial((1,), (0, 0))
    with pytest.raises(ValueError):
        Binomial((-1,), (0,))
