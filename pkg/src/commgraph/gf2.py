"""GF(2) vectors, rank computation, and the alternating bilinear commutator form.

Vectors live in F_2^d and are stored as Python ints (bit i-1 holds the
coefficient of generator i, least significant bit first), so XOR aggregation
runs word-parallel.  A commutator table assigns one r-bit value to every
unordered generator pair (i, j), 1 <= i < j <= m; the induced form is

    B(u, v) = XOR of c_ij over all pairs i < j with u_i*v_j != u_j*v_i,

which is bilinear, symmetric, and alternating over F_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class DimensionMismatchError(ValueError):
    """Operands do not share the required dimension."""


@dataclass(frozen=True)
class GF2Vector:
    """A vector in F_2^dim, packed into an int (LSB = first coordinate)."""

    bits: int
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"dimension must be non-negative, got {self.dim}")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(
                f"bits 0x{self.bits:x} do not fit in dimension {self.dim}"
            )

    def __xor__(self, other: GF2Vector) -> GF2Vector:
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"cannot add vectors of dimension {self.dim} and {other.dim}"
            )
        return GF2Vector(self.bits ^ other.bits, self.dim)

    def bit(self, index: int) -> int:
        """Coefficient at 0-based position index."""
        if not 0 <= index < self.dim:
            raise IndexError(f"bit index {index} out of range for dim {self.dim}")
        return (self.bits >> index) & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    @classmethod
    def zero(cls, dim: int) -> GF2Vector:
        return cls(0, dim)

    @classmethod
    def unit(cls, index: int, dim: int) -> GF2Vector:
        """Standard basis vector e_{index+1} (0-based index)."""
        return cls(1 << index, dim)


def pair_count(m: int) -> int:
    return m * (m - 1) // 2


def pair_index(i: int, j: int, m: int) -> int:
    """Slot of pair (i, j), 1 <= i < j <= m, in lexicographic order.

    Pairs are laid out (1,2), (1,3), ..., (1,m), (2,3), ...; the slot of
    (i, j) is (i-1)(2m-i)/2 + (j-i-1).
    """
    if not (1 <= i < j <= m):
        raise ValueError(f"pair ({i},{j}) invalid for m={m}")
    return (i - 1) * (2 * m - i) // 2 + (j - i - 1)


def pair_iter(m: int) -> Iterable[tuple[int, int]]:
    """All pairs (i, j), 1 <= i < j <= m, in lexicographic slot order."""
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            yield (i, j)


@dataclass(frozen=True)
class CommutatorTable:
    """Structure constants of the random group: one F_2^r value per generator pair.

    values[pair_index(i, j, m)] is the commutator value c_ij.  The table fully
    determines the group and its commuting graph; the derived quantities are
    n = 2^m - 1 vertices and edge probability p = 2^-r.
    """

    m: int
    r: int
    values: tuple[GF2Vector, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if len(self.values) != pair_count(self.m):
            raise ValueError(
                f"expected {pair_count(self.m)} values for m={self.m}, "
                f"got {len(self.values)}"
            )
        for k, v in enumerate(self.values):
            if v.dim != self.r:
                raise DimensionMismatchError(
                    f"value at slot {k} has dimension {v.dim}, expected {self.r}"
                )

    @property
    def n(self) -> int:
        """Vertex count of the derived commuting graph."""
        return (1 << self.m) - 1

    @property
    def p(self) -> float:
        """Marginal edge probability 2^-r."""
        return 2.0 ** (-self.r)

    def value(self, i: int, j: int) -> GF2Vector:
        """Commutator value c_ij for a pair i < j (1-based)."""
        return self.values[pair_index(i, j, self.m)]

    def raw_values(self) -> tuple[int, ...]:
        """The table values as plain ints, in slot order."""
        return tuple(v.bits for v in self.values)

    @classmethod
    def from_ints(cls, m: int, r: int, raw: Sequence[int]) -> CommutatorTable:
        return cls(m, r, tuple(GF2Vector(v, r) for v in raw))


def _rank_ints(words: Iterable[int]) -> int:
    """GF(2) rank of int-packed row vectors by incremental elimination."""
    pivots: dict[int, int] = {}
    rank = 0
    for word in words:
        while word:
            top = word.bit_length() - 1
            if top in pivots:
                word ^= pivots[top]
            else:
                pivots[top] = word
                rank += 1
                break
    return rank


def vec_rank(vectors: Sequence[GF2Vector]) -> int:
    """Dimension of the span of the given vectors over F_2.

    All vectors must share one dimension; the empty family has rank 0.
    """
    dims = {v.dim for v in vectors}
    if len(dims) > 1:
        raise DimensionMismatchError(f"mixed dimensions in rank input: {sorted(dims)}")
    return _rank_ints(v.bits for v in vectors)


def bilinear_eval(table: CommutatorTable, u: GF2Vector, v: GF2Vector) -> GF2Vector:
    """Evaluate the commutator form B(u, v) directly from the pair rule.

    Deliberately straightforward (one pass over all pairs); the fast path
    for whole graphs goes through row_map.
    """
    if u.dim != table.m or v.dim != table.m:
        raise DimensionMismatchError(
            f"operands of dimension {u.dim}, {v.dim} do not match m={table.m}"
        )
    ub, vb = u.bits, v.bits
    acc = 0
    raw = table.raw_values()
    slot = 0
    for i in range(1, table.m + 1):
        ui = (ub >> (i - 1)) & 1
        vi = (vb >> (i - 1)) & 1
        for j in range(i + 1, table.m + 1):
            uj = (ub >> (j - 1)) & 1
            vj = (vb >> (j - 1)) & 1
            if ui & vj != uj & vi:
                acc ^= raw[slot]
            slot += 1
    return GF2Vector(acc, table.r)


def row_map_ints(raw: Sequence[int], m: int, ubits: int) -> list[int]:
    """Int-level row_map: words w_1..w_m with w_j = XOR of c_ij over i != j, u_i = 1.

    Contracting against v (XOR of w_j over set bits of v) reproduces B(u, v);
    this is the precomputation every per-row graph pass relies on.
    """
    w = [0] * m
    slot = 0
    for i in range(1, m + 1):
        ui = (ubits >> (i - 1)) & 1
        for j in range(i + 1, m + 1):
            c = raw[slot]
            if ui:
                w[j - 1] ^= c
            if (ubits >> (j - 1)) & 1:
                w[i - 1] ^= c
            slot += 1
    return w


def row_map(table: CommutatorTable, u: GF2Vector) -> tuple[GF2Vector, ...]:
    """Per-generator partial sums of B(u, .), as m vectors of dimension r."""
    if u.dim != table.m:
        raise DimensionMismatchError(
            f"operand of dimension {u.dim} does not match m={table.m}"
        )
    words = row_map_ints(table.raw_values(), table.m, u.bits)
    return tuple(GF2Vector(w, table.r) for w in words)
