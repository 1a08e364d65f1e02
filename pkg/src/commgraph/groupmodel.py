"""Sampling the random group and checking its structural properties.

A group instance is just a CommutatorTable: each of the C(m,2) generator
pairs gets an independent uniform value in F_2^r.  The checks verify, per
instance, that the commutator values span all of F_2^r (the derived subgroup
is as large as intended) and that the bilinear form has trivial radical (the
center contains nothing beyond the designated generators).  Both hold with
high probability but can fail; callers record the flags rather than resample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import CommutatorTable, GF2Vector, pair_count, vec_rank


def trial_generator(master_seed: int, trial_index: int) -> np.random.Generator:
    """Counter-based per-trial stream, derived from (master_seed, trial_index).

    Philox keyed through a spawned SeedSequence: trials are reproducible and
    independent of execution order or worker scheduling.
    """
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(trial_index,))
    return np.random.Generator(np.random.Philox(seq))


class BitStream:
    """Uniform bits drawn from a Generator, 64-bit words consumed LSB-first.

    The draw order is part of the on-disk reproducibility contract: table
    sampling takes exactly r bits per pair, pairs in lexicographic order.
    """

    def __init__(self, rng: np.random.Generator):
        self._rng = rng
        self._word = 0
        self._left = 0

    def take(self, k: int) -> int:
        """Next k bits as an int; first bit drawn lands in the LSB."""
        out = 0
        got = 0
        while got < k:
            if self._left == 0:
                self._word = int(self._rng.integers(0, 1 << 64, dtype=np.uint64))
                self._left = 64
            use = min(k - got, self._left)
            out |= (self._word & ((1 << use) - 1)) << got
            self._word >>= use
            self._left -= use
            got += use
        return out


def sample_table(m: int, r: int, rng: np.random.Generator) -> CommutatorTable:
    """Draw a uniform commutator table: r fresh bits per pair, lex pair order."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    stream = BitStream(rng)
    raw = [stream.take(r) for _ in range(pair_count(m))]
    return CommutatorTable.from_ints(m, r, raw)


def truncate_table(table: CommutatorTable, r: int) -> CommutatorTable:
    """Keep the first r bits of every pair value (components z_1..z_r).

    This is the coupling between nested models: the truncated form is the
    original one masked to r bits, so every edge of the wider-r graph is an
    edge of the truncated graph and diameters are monotone in r.
    """
    if not 0 <= r <= table.r:
        raise ValueError(f"cannot truncate r={table.r} to {r}")
    mask = (1 << r) - 1
    return CommutatorTable.from_ints(table.m, r, [v & mask for v in table.raw_values()])


def check_derived_span(table: CommutatorTable) -> tuple[bool, int]:
    """Whether the pair values span all of F_2^r; returns (flag, rank)."""
    rank = vec_rank(table.values)
    return rank == table.r, rank


def check_center_trivial(table: CommutatorTable) -> tuple[bool, list[GF2Vector]]:
    """Whether the form's radical is trivial; returns (flag, radical basis).

    The radical is the null space of u -> (B(u, e_1), ..., B(u, e_m)), an
    r*m x m system over F_2.  Row i of the system (as one packed word) is the
    concatenation of c_{min(i,j),max(i,j)} over the m blocks j; elimination
    with combination trackers yields a basis of the kernel directly.
    """
    m, r = table.m, table.r
    raw = table.raw_values()
    stacked = [0] * m
    slot = 0
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            c = raw[slot]
            stacked[i - 1] |= c << ((j - 1) * r)
            stacked[j - 1] |= c << ((i - 1) * r)
            slot += 1

    pivots: dict[int, tuple[int, int]] = {}
    kernel: list[GF2Vector] = []
    for i in range(m):
        row = stacked[i]
        tracker = 1 << i
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = (row, tracker)
                break
            prow, ptrack = pivots[top]
            row ^= prow
            tracker ^= ptrack
        else:
            kernel.append(GF2Vector(tracker, m))
    return not kernel, kernel


@dataclass(frozen=True)
class StructuralReport:
    """Outcome of both structural checks on one table.

    claimed_orders is the triple (|G'|, |Z(G)|, |G/Z(G)|) = (2^r, 2^(m+r), 2^m),
    populated only when both checks pass (otherwise the orders are not
    guaranteed by the construction).
    """

    derived_rank: int
    derived_spans: bool
    center_trivial: bool
    radical_basis: tuple[GF2Vector, ...]
    claimed_orders: tuple[int, int, int] | None

    @property
    def all_passed(self) -> bool:
        return self.derived_spans and self.center_trivial


def structural_report(table: CommutatorTable) -> StructuralReport:
    """Run both checks and bundle the result."""
    spans, rank = check_derived_span(table)
    trivial, radical = check_center_trivial(table)
    orders = None
    if spans and trivial:
        m, r = table.m, table.r
        orders = (1 << r, 1 << (m + r), 1 << m)
    return StructuralReport(
        derived_rank=rank,
        derived_spans=spans,
        center_trivial=trivial,
        radical_basis=tuple(radical),
        claimed_orders=orders,
    )
