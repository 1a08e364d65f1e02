"""Commuting-graph construction and bit-parallel graph analysis.

Adjacency is stored as one Python int per vertex (bit v of rows[u] marks the
edge {u, v}), so BFS frontier expansion is a word-parallel OR of rows.  The
same engine serves group-derived graphs and Erdos-Renyi baselines.

Group graphs put the non-zero vectors of F_2^m on vertices: internal index v
corresponds to vector label v + 1, and {u, v} is an edge exactly when the
commutator form vanishes on the two labels.

Disconnected graphs get diameter INFINITE (float('inf'), serialized "inf"),
never a numeric stand-in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gf2 import CommutatorTable, GF2Vector, bilinear_eval, row_map_ints

INFINITE = float("inf")

DEFAULT_MAX_M = 16

MAX_PATH_LENGTH = 6


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds a configured size guard."""


@dataclass(frozen=True)
class CommutingGraph:
    """Undirected graph on n vertices with int-packed adjacency rows.

    origin tags how the graph arose: ("group", m, r), ("er", n, p), or
    ("explicit",).  For group graphs, vertex index v carries vector label v+1.
    """

    n: int
    rows: tuple[int, ...]
    origin: tuple = ("explicit",)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        yield from _iter_bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges {u, v} with u < v."""
        for u in range(self.n):
            for v in _iter_bits(self.rows[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


@dataclass(frozen=True)
class DiameterReport:
    """Connectivity, diameter, eccentricities, and component structure."""

    connected: bool
    diameter: int | float
    eccentricities: tuple[int | float, ...]
    component_sizes: tuple[int, ...]
    largest_component: int


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]],
                     origin: tuple = ("explicit",)) -> CommutingGraph:
    """Build a graph from an explicit edge list (self-loops rejected)."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return CommutingGraph(n, tuple(rows), origin)


def build_graph(table: CommutatorTable, max_m: int = DEFAULT_MAX_M) -> CommutingGraph:
    """Materialize the commuting graph of a table.

    One row per source label u: the row_map words of u plus an incremental
    subset-XOR sweep give B(u, v) for every v in O(n) per row.
    """
    m = table.m
    if m > max_m:
        raise ResourceLimitError(
            f"m={m} exceeds the size guard max_m={max_m} (2^{m}-1 vertices)"
        )
    n = table.n
    raw = table.raw_values()
    rows = []
    bval = [0] * (n + 1)
    for u in range(1, n + 1):
        w = row_map_ints(raw, m, u)
        chars = ["0"] * n
        for v in range(1, n + 1):
            low = v & -v
            bv = bval[v ^ low] ^ w[low.bit_length() - 1]
            bval[v] = bv
            if bv == 0 and v != u:
                chars[n - v] = "1"
        rows.append(int("".join(chars), 2))
    return CommutingGraph(n, tuple(rows), ("group", m, table.r))


def build_graph_naive(table: CommutatorTable,
                      max_m: int = DEFAULT_MAX_M) -> CommutingGraph:
    """Differential-testing oracle: evaluate the form pairwise, no shortcuts."""
    m = table.m
    if m > max_m:
        raise ResourceLimitError(
            f"m={m} exceeds the size guard max_m={max_m} (2^{m}-1 vertices)"
        )
    n = table.n
    rows = [0] * n
    for u in range(1, n + 1):
        uvec = GF2Vector(u, m)
        for v in range(u + 1, n + 1):
            if bilinear_eval(table, uvec, GF2Vector(v, m)).is_zero():
                rows[u - 1] |= 1 << (v - 1)
                rows[v - 1] |= 1 << (u - 1)
    return CommutingGraph(n, tuple(rows), ("group", m, table.r))


def _flood(rows: Sequence[int], start: int) -> int:
    """Bitmask of the connected component containing start."""
    reached = 1 << start
    frontier = reached
    while frontier:
        acc = reached
        for v in _iter_bits(frontier):
            acc |= rows[v]
        frontier = acc & ~reached
        reached = acc
    return reached


def components(graph: CommutingGraph) -> tuple[int, ...]:
    """Component sizes, largest first; sizes sum to n."""
    rows = graph.rows
    seen = 0
    sizes = []
    for v in range(graph.n):
        if not (seen >> v) & 1:
            comp = _flood(rows, v)
            seen |= comp
            sizes.append(comp.bit_count())
    return tuple(sorted(sizes, reverse=True))


def _bfs_eccentricity(rows: Sequence[int], full: int, src: int) -> int | float:
    """Layered BFS from src; INFINITE when some vertex stays unreached.

    The expansion of a layer aborts the moment everything is reached: the
    remaining frontier can only re-OR already-visited rows.
    """
    reached = 1 << src
    frontier = reached
    ecc = 0
    while True:
        if reached == full:
            return ecc
        acc = reached
        pending = 64
        for v in _iter_bits(frontier):
            acc |= rows[v]
            pending -= 1
            if pending == 0:
                if acc == full:
                    break
                pending = 64
        new = acc & ~reached
        if not new:
            return INFINITE
        reached = acc
        frontier = new
        ecc += 1


def eccentricity(graph: CommutingGraph, v: int) -> int | float:
    """Maximum BFS distance from v; INFINITE if v cannot reach some vertex."""
    if not 0 <= v < graph.n:
        raise IndexError(f"vertex {v} out of range for n={graph.n}")
    full = (1 << graph.n) - 1
    return _bfs_eccentricity(graph.rows, full, v)


def diameter(graph: CommutingGraph) -> DiameterReport:
    """Full diameter report: components first, then BFS from every source.

    A disconnected graph short-circuits: diameter and all eccentricities are
    INFINITE by convention.
    """
    sizes = components(graph)
    largest = sizes[0] if sizes else 0
    if len(sizes) > 1:
        return DiameterReport(
            connected=False,
            diameter=INFINITE,
            eccentricities=(INFINITE,) * graph.n,
            component_sizes=sizes,
            largest_component=largest,
        )
    full = (1 << graph.n) - 1
    rows = graph.rows
    eccs = tuple(_bfs_eccentricity(rows, full, s) for s in range(graph.n))
    return DiameterReport(
        connected=True,
        diameter=max(eccs, default=0),
        eccentricities=eccs,
        component_sizes=sizes,
        largest_component=largest,
    )


def degree_sequence(graph: CommutingGraph) -> list[int]:
    """Vertex degrees, non-increasing."""
    return sorted((r.bit_count() for r in graph.rows), reverse=True)


def count_simple_paths(graph: CommutingGraph, a: int, b: int, length: int) -> int:
    """Exact number of simple a-b paths with the given number of edges.

    Pruned depth-first enumeration; vertices never repeat and b is only
    entered on the final step.  Guarded to short lengths.
    """
    if not 1 <= length <= MAX_PATH_LENGTH:
        raise ResourceLimitError(
            f"path length {length} outside guard 1..{MAX_PATH_LENGTH}"
        )
    if a == b:
        raise ValueError("path endpoints must differ")
    for v in (a, b):
        if not 0 <= v < graph.n:
            raise IndexError(f"vertex {v} out of range for n={graph.n}")
    rows = graph.rows
    bbit = 1 << b

    def extend(cur: int, visited: int, remaining: int) -> int:
        if remaining == 1:
            return 1 if rows[cur] & bbit else 0
        total = 0
        for v in _iter_bits(rows[cur] & ~visited):
            total += extend(v, visited | (1 << v), remaining - 1)
        return total

    # b sits in the visited mask from the start, so it is only reached by
    # the explicit final-step test.
    return extend(a, (1 << a) | bbit, length)
