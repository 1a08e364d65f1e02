"""Erdos-Renyi baseline and analytic path-count diagnostics.

The planner picks delta_1 so that the group model's edge probability
p = 2^-r lands in the diameter-k window for n = 2^m - 1 vertices: writing
p = n^(-1+eps), the window is eps in (1/k + delta, 1/(k-1) - delta).  Note
the group model only realizes p at negative powers of 2, so the window is
hit by choosing r, not by tuning p continuously.

The calculators give the exact expected simple-path count, the leading-order
dependent-pair sum (implicit constant fixed at 1, a heuristic scale rather
than a bound), and the two-branch exponential bound on missing all paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphkit import CommutingGraph

DELTA1_GRID_STEP = 0.01


@dataclass(frozen=True)
class ErPlan:
    """Resolved model parameters for a target diameter k."""

    k: int
    delta: float
    m: int
    delta1: float
    r: int
    p: float
    n: int
    epsilon_n: float
    valid: bool

    @property
    def window(self) -> tuple[float, float]:
        return (1.0 / self.k + self.delta, 1.0 / (self.k - 1) - self.delta)


@dataclass(frozen=True)
class PathMoments:
    """Analytic diagnostics for paths of one length between a fixed pair."""

    mu_exact: float
    delta_main: float
    janson_bound: float


def _check_plan_inputs(k: int, delta: float, m: int) -> None:
    if k < 2:
        raise ValueError(f"target diameter k must be >= 2, got {k}")
    limit = 1.0 / (2 * k * (k - 1))
    if not 0 < delta < limit:
        raise ValueError(f"delta must lie in (0, {limit:.6g}), got {delta}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")


def evaluate_plan(k: int, delta: float, m: int, delta1: float) -> ErPlan:
    """Plan for one explicit delta_1: r = floor((1-delta1) m), p = 2^-r."""
    _check_plan_inputs(k, delta, m)
    if not 0 < delta1 < 1:
        raise ValueError(f"delta1 must lie in (0, 1), got {delta1}")
    r = math.floor((1 - delta1) * m)
    n = (1 << m) - 1
    p = 2.0 ** (-r)
    epsilon_n = 1.0 + math.log(p) / math.log(n)
    lo, hi = 1.0 / k + delta, 1.0 / (k - 1) - delta
    return ErPlan(
        k=k, delta=delta, m=m, delta1=delta1, r=r, p=p, n=n,
        epsilon_n=epsilon_n, valid=lo < epsilon_n < hi,
    )


def plan_parameters(k: int, delta: float, m: int) -> ErPlan:
    """Grid-search delta_1 (step 0.01) for the plan closest to the window midpoint.

    Returns the best-effort plan with valid=False when no grid point lands
    inside the window.  Ties go to the smallest delta_1.
    """
    _check_plan_inputs(k, delta, m)
    lo, hi = 1.0 / k + delta, 1.0 / (k - 1) - delta
    mid = (lo + hi) / 2
    best: ErPlan | None = None
    best_dist = math.inf
    steps = round(1 / DELTA1_GRID_STEP)
    for idx in range(1, steps):
        plan = evaluate_plan(k, delta, m, idx * DELTA1_GRID_STEP)
        dist = abs(plan.epsilon_n - mid)
        if dist < best_dist:
            best, best_dist = plan, dist
    assert best is not None
    return best


def sample_gnp(n: int, p: float, rng: np.random.Generator) -> CommutingGraph:
    """G(n, p): every unordered pair an independent edge with probability p.

    Pair draws happen row by row in lexicographic order, so a fixed seed
    fixes the graph.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    upper = np.zeros((n, n), dtype=bool)
    for u in range(n - 1):
        upper[u, u + 1:] = rng.random(n - 1 - u) < p
    adj = upper | upper.T
    nbytes = (n + 7) // 8
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(
        int.from_bytes(packed[v, :nbytes].tobytes(), "little") for v in range(n)
    )
    return CommutingGraph(n, rows, ("er", n, p))


def expected_simple_paths(n: int, p: float, length: int) -> float:
    """Exact expected count of simple a-b paths of the given length in G(n, p).

    (n-2)(n-3)...(n-length) ordered interior choices, each path present with
    probability p^length.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    interior = 1.0
    for i in range(2, length + 1):
        interior *= n - i
    return interior * p**length


def delta_main_term(n: int, p: float, k: int) -> float:
    """Leading-order sum over dependent path pairs: sum_{l=1}^{k-1} n^(2k-2-l) p^(2k-l).

    The implicit constant is fixed at 1; treat the value as a scale estimate,
    not a bound.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return sum(n ** (2 * k - 2 - l) * p ** (2 * k - l) for l in range(1, k))


def janson_bound(mu: float, delta: float) -> float:
    """Upper bound on P(no path): exp(-mu + delta/2) if delta <= mu, else exp(-mu^2 / (2 delta)).

    Clamped to [0, 1]; (0, 0) yields the vacuous bound 1.
    """
    if mu < 0 or delta < 0:
        raise ValueError(f"mu and delta must be non-negative, got ({mu}, {delta})")
    if delta <= mu:
        value = math.exp(-mu + delta / 2)
    else:
        value = math.exp(-(mu * mu) / (2 * delta))
    return min(1.0, max(0.0, value))


def path_moments(n: int, p: float, k: int) -> PathMoments:
    """Bundle the three calculators for paths of length k."""
    mu = expected_simple_paths(n, p, k)
    dm = delta_main_term(n, p, k)
    return PathMoments(mu_exact=mu, delta_main=dm, janson_bound=janson_bound(mu, dm))


def epsilon_of(n: int, p: float) -> float:
    """The exponent eps with p = n^(-1+eps)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    return 1.0 + math.log(p) / math.log(n)


def predicted_diameter(n: int, p: float) -> int | None:
    """Concentration target ceil(1/eps) for p = n^(-1+eps); None when eps <= 0."""
    eps = epsilon_of(n, p)
    if eps <= 0:
        return None
    return math.ceil(1.0 / eps)
