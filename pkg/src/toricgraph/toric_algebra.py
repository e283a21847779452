"""Integer matrices, exponent vectors and binomials of a toric ideal.

Everything here works at the matrix level: a binomial ``x^plus - x^minus``
is stored as its two exponent vectors, and membership in the toric ideal
of ``A`` means both monomials have the same A-degree.  Python ints are
arbitrary precision, so no entry can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.cols} columns")
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"non-integer matrix entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not entries:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def from_json(cls, doc: dict) -> "IntegerMatrix":
        try:
            rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"matrix document missing field: {exc}") from None
        return cls(int(rows), int(cols), tuple(tuple(r) for r in entries))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def times(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product ``A v``."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(r, v) if x) for r in self.entries)


@dataclass(frozen=True, order=True)
class Binomial:
    """``x^plus - x^minus`` stored as two nonnegative exponent vectors."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("plus and minus exponent vectors differ in length")
        if any(x < 0 for x in self.plus) or any(x < 0 for x in self.minus):
            raise ValueError("exponents must be nonnegative")

    @property
    def length(self) -> int:
        return len(self.plus)

    @property
    def degree(self) -> int:
        return sum(self.plus)

    def vector(self) -> tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.plus, self.minus))

    def is_zero(self) -> bool:
        return self.plus == self.minus

    def is_irreducible(self) -> bool:
        """Disjoint supports, i.e. no common monomial factor."""
        return not any(p and q for p, q in zip(self.plus, self.minus))

    def swapped(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def canonical(self) -> "Binomial":
        # The side holding more of the lowest index where the sides differ is plus.
        for p, q in zip(self.plus, self.minus):
            if p != q:
                return self if p > q else self.swapped()
        return self

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus)}

    @classmethod
    def from_json(cls, doc: dict) -> "Binomial":
        return cls(tuple(int(x) for x in doc["plus"]), tuple(int(x) for x in doc["minus"]))

    def __str__(self):
        def mono(u):
            parts = [f"e{i}" if k == 1 else f"e{i}^{k}" for i, k in enumerate(u) if k]
            return "*".join(parts) or "1"

        return f"{mono(self.plus)} - {mono(self.minus)}"


def a_degree(A: IntegerMatrix, u: Sequence[int]) -> tuple[int, ...]:
    """A-degree ``u_1 a_1 + ... + u_m a_m`` of the monomial ``x^u``."""
    return A.times(u)


def binomial_from_kernel_vector(v: Sequence[int]) -> Binomial:
    return Binomial(tuple(x if x > 0 else 0 for x in v), tuple(-x if x < 0 else 0 for x in v))


def in_kernel(A: IntegerMatrix, b: Binomial) -> bool:
    if b.length != A.cols:
        raise ValueError(f"binomial of length {b.length} for a matrix with {A.cols} columns")
    return a_degree(A, b.plus) == a_degree(A, b.minus)


def _leq(u, v):
    return all(x <= y for x, y in zip(u, v))


def dominates(b1: Binomial, b2: Binomial) -> bool:
    """True if ``b1`` divides ``b2`` side by side, in either orientation of ``b1``.

    Reflexive: a binomial dominates itself.  Callers that need strict
    dominance compare for equality themselves.
    """
    if b1.length != b2.length:
        raise ValueError("binomials of different lengths")
    if _leq(b1.plus, b2.plus) and _leq(b1.minus, b2.minus):
        return True
    return _leq(b1.plus, b2.minus) and _leq(b1.minus, b2.plus)


def is_primitive_in_set(b: Binomial, kernel_sample: Iterable[Binomial]) -> bool:
    """No other nonzero binomial of ``kernel_sample`` dominates ``b``.

    Sound only when ``kernel_sample`` holds every kernel binomial bounded by
    ``b`` (a complete Graver basis does).
    """
    if b.is_zero():
        return False
    cb = b.canonical()
    for other in kernel_sample:
        if other.is_zero() or other.canonical() == cb:
            continue
        if dominates(other, b):
            return False
    return True


def support(b: Binomial) -> frozenset[int]:
    return frozenset(i for i, (p, q) in enumerate(zip(b.plus, b.minus)) if p + q)


def canonical_set(binomials: Iterable[Binomial]) -> frozenset[Binomial]:
    return frozenset(b.canonical() for b in binomials)


def sorted_binomials(binomials: Iterable[Binomial]) -> list[Binomial]:
    """Canonically signed and sorted lexicographically by (plus, minus)."""
    return sorted(canonical_set(binomials))
