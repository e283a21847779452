"""Matrix-level ground truth for toric ideals.

Nothing in here knows about graphs.  The integer kernel comes from
unimodular row reduction, the Graver basis from a Pottier-style completion
over the kernel lattice, and circuits from a scan of column subsets.  The
graph modules are checked against these results.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import CapExceeded
from .toric_algebra import Binomial, IntegerMatrix, binomial_from_kernel_vector

DEFAULT_MAX_GRAVER = 10**5
DEFAULT_MAX_PAIRS = 10**7


@dataclass(frozen=True)
class KernelLattice:
    basis: tuple[tuple[int, ...], ...]
    dimension: int

    @property
    def rank(self) -> int:
        return len(self.basis)


def _hermite_rows(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form (positive pivots, reduced above) in place."""
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
    return rows


def integer_kernel_basis(A: IntegerMatrix) -> KernelLattice:
    """A basis of the full integer kernel ``{v : A v = 0}``.

    Row-reduces ``[A^T | I]`` with unimodular integer operations; rows whose
    left part vanishes carry kernel vectors, and because the transform is
    unimodular they span the whole kernel lattice, not a sublattice.
    """
    n, m = A.rows, A.cols
    cols = A.columns()
    aug = [list(cols[j]) + [1 if k == j else 0 for k in range(m)] for j in range(m)]
    _hermite_rows(aug, n)
    kernel = [row[n:] for row in aug if not any(row[:n])]
    kernel = [r for r in _hermite_rows(kernel, m) if any(r)]
    return KernelLattice(tuple(tuple(r) for r in kernel), m)


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][c]:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _rational_nullspace(cols: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Nullspace of the matrix whose columns are ``cols``, one vector per free column."""
    k = len(cols)
    n = len(cols[0]) if cols else 0
    mat = [[Fraction(cols[j][i]) for j in range(k)] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(n):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * k
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -mat[row][f]
        basis.append(v)
    return basis


def _primitive_integer(v: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def circuits_of_matrix(A: IntegerMatrix) -> frozenset[Binomial]:
    """Support-minimal kernel vectors, scaled to coprime integers, canonically signed.

    A column subset supports a circuit exactly when its rational kernel is
    one-dimensional and the spanning vector uses every column of the subset.
    Subsets larger than ``rank(A) + 1`` cannot qualify and are not scanned.
    """
    m = A.cols
    cols = A.columns()
    limit = rational_rank(A.entries) + 1 if A.rows else 1
    out = set()
    for size in range(1, min(limit, m) + 1):
        for subset in itertools.combinations(range(m), size):
            ns = _rational_nullspace([cols[j] for j in subset])
            if len(ns) != 1 or not all(ns[0]):
                continue
            v = [0] * m
            for j, x in zip(subset, _primitive_integer(ns[0])):
                v[j] = x
            out.add(binomial_from_kernel_vector(v).canonical())
    return frozenset(out)


# -- Pottier completion ---------------------------------------------------------


class _Element:
    """Lattice vector with sign masks for fast conformal tests."""

    __slots__ = ("vec", "pos", "neg", "norm")

    def __init__(self, vec):
        self.vec = vec
        self.pos, self.neg = _masks(vec)
        self.norm = sum(abs(x) for x in vec)


def _masks(vec):
    pos = neg = 0
    for i, x in enumerate(vec):
        if x > 0:
            pos |= 1 << i
        elif x < 0:
            neg |= 1 << i
    return pos, neg


def _conformal_below(g: _Element, vec, pos, neg, sign) -> bool:
    """Whether ``sign * g`` lies below ``vec`` in the conformal order."""
    if sign > 0:
        if g.pos & ~pos or g.neg & ~neg:
            return False
        return all(abs(x) <= abs(y) for x, y in zip(g.vec, vec) if x)
    if g.neg & ~pos or g.pos & ~neg:
        return False
    return all(abs(x) <= abs(y) for x, y in zip(g.vec, vec) if x)


def _reduce(vec, elements: list[_Element]):
    """Subtract sign-compatible reducers (lowest index first) until none applies."""
    vec = list(vec)
    pos, neg = _masks(vec)
    while pos or neg:
        for g in elements:
            if _conformal_below(g, vec, pos, neg, 1):
                vec = [x - y for x, y in zip(vec, g.vec)]
                break
            if _conformal_below(g, vec, pos, neg, -1):
                vec = [x + y for x, y in zip(vec, g.vec)]
                break
        else:
            break
        pos, neg = _masks(vec)
    return vec


def _canonical_vec(vec):
    for x in vec:
        if x:
            return tuple(vec) if x > 0 else tuple(-y for y in vec)
    return tuple(vec)


def normal_form(v: Sequence[int], G: Iterable[Binomial]) -> tuple[int, ...]:
    """Reduce ``v`` by sign-compatible elements of ``G`` (either sign), lowest index first.

    ``G`` is taken in canonical sorted order so the result is deterministic.
    """
    return normal_forms([v], G)[0]


def normal_forms(vectors: Iterable[Sequence[int]], G: Iterable[Binomial]) -> list[tuple[int, ...]]:
    elements = [_Element(b.vector()) for b in sorted(b.canonical() for b in G)]
    return [tuple(_reduce(v, elements)) for v in vectors]


def graver_basis(
    A: IntegerMatrix,
    max_elements: int = DEFAULT_MAX_GRAVER,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> frozenset[Binomial]:
    """Graver basis of the toric ideal of ``A`` by completion.

    Starting from a kernel lattice basis, sums and differences of pairs are
    reduced against the current set; nonzero remainders are added.  Pairs
    are processed smallest 1-norm first, ties in insertion order.  Pairs
    that are already sign-compatible reduce to zero trivially and are
    skipped.  The completed set is then cut down to its conformally minimal
    elements.
    """
    lattice = integer_kernel_basis(A)
    elements: list[_Element] = []
    seen: set[tuple[int, ...]] = set()
    heap: list = []
    counter = itertools.count()
    pairs = 0

    def push(vec):
        nonlocal pairs
        pairs += 1
        if pairs > max_pairs:
            raise CapExceeded("completion candidate pairs", max_pairs)
        heapq.heappush(heap, (sum(abs(x) for x in vec), next(counter), vec))

    def add(vec):
        key = _canonical_vec(vec)
        if key in seen:
            return
        if len(elements) >= max_elements:
            raise CapExceeded("Graver elements", max_elements)
        f = _Element(key)
        for g in elements:
            # f + g is worth reducing only if the two disagree in sign somewhere
            if (f.pos & g.neg) or (f.neg & g.pos):
                push(tuple(x + y for x, y in zip(f.vec, g.vec)))
            # likewise f - g needs a coordinate where they agree in sign
            if (f.pos & g.pos) or (f.neg & g.neg):
                push(tuple(x - y for x, y in zip(f.vec, g.vec)))
        seen.add(key)
        elements.append(f)

    for b in lattice.basis:
        add(b)
    while heap:
        _, _, vec = heapq.heappop(heap)
        r = _reduce(vec, elements)
        if any(r):
            add(r)

    minimal = []
    for f in elements:
        dominated = False
        for g in elements:
            if g is f or g.norm > f.norm:
                continue
            if _conformal_below(g, f.vec, f.pos, f.neg, 1) or _conformal_below(g, f.vec, f.pos, f.neg, -1):
                dominated = True
                break
        if not dominated:
            minimal.append(f)
    return frozenset(binomial_from_kernel_vector(f.vec).canonical() for f in minimal)
