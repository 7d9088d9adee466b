"""Conflict-free colouring of hypergraphs.

The randomized colorer draws a uniform colouring from a palette sized
``c1 * t * gamma**(1/t) * log2(gamma)`` and then repeatedly resamples the
lowest-index edge that has no uniquely coloured point. If the round budget
runs out the palette doubles and the process restarts on a derived stream.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

EXACT_MAX_POINTS = 12


class BudgetExhausted(RuntimeError):
    """The resampler failed even after the last palette doubling."""

    def __init__(self, rounds: int, violations: int, doublings: int, palette: int):
        self.rounds = rounds
        self.violations = violations
        self.doublings = doublings
        self.palette = palette
        super().__init__(
            f"conflict-free colouring not found: {violations} violated edges after "
            f"{rounds} rounds, {doublings} doublings, final palette {palette}"
        )


class OracleSizeError(ValueError):
    """Instance too large for exhaustive search."""


@dataclass(frozen=True)
class Hypergraph:
    """Points plus an ordered list of edges; ``labels[i]`` names the origin of edge i."""

    points: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise ValueError("duplicate points")
        for i, e in enumerate(self.edges):
            if not e:
                raise ValueError(f"edge {i} is empty")
            if not pts.issuperset(e):
                raise ValueError(f"edge {i} has points outside the point set")
        if self.labels is not None and len(self.labels) != len(self.edges):
            raise ValueError("labels must align with edges")

    @classmethod
    def build(cls, points, edges, labels=None) -> "Hypergraph":
        return cls(
            tuple(sorted(points)),
            tuple(tuple(sorted(set(e))) for e in edges),
            None if labels is None else tuple(labels),
        )

    def without_edge(self, i: int) -> "Hypergraph":
        edges = self.edges[:i] + self.edges[i + 1:]
        labels = None if self.labels is None else self.labels[:i] + self.labels[i + 1:]
        return Hypergraph(self.points, edges, labels)


@dataclass(frozen=True)
class CfParams:
    t: int
    gamma: int
    c1: float = 4.0
    max_rounds_factor: int = 1000
    max_doublings: int = 10

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be a positive integer")
        if self.gamma < 2:
            raise ValueError("gamma must be at least 2")
        if not self.c1 > 0:
            raise ValueError("c1 must be positive")
        if self.max_rounds_factor < 1 or self.max_doublings < 0:
            raise ValueError("round budget must be positive and doublings nonnegative")


@dataclass
class CfColoring:
    colors: dict[int, int]
    K: int
    rounds_used: int = 0
    doublings_used: int = 0


@dataclass
class CfReport:
    valid: bool
    # lowest colour occurring exactly once in each edge, None for a violated edge
    witnesses: list[int | None] = field(default_factory=list)


def palette_size(p: CfParams) -> int:
    raw = p.c1 * p.t * p.gamma ** (1.0 / p.t) * math.log2(p.gamma)
    # absorb float noise so exact products like 2*2*2 stay 8
    return max(2, math.ceil(raw - 1e-9))


def unique_color(values) -> int | None:
    """Lowest value occurring exactly once, or None."""
    once = [c for c, k in Counter(values).items() if k == 1]
    return min(once) if once else None


def _lookup(coloring: Mapping[int, int] | Sequence[int], x: int) -> int:
    try:
        c = coloring[x]
    except (KeyError, IndexError):
        raise ValueError(f"point {x} is uncoloured") from None
    if c is None:
        raise ValueError(f"point {x} is uncoloured")
    return c


def verify_cf(h: Hypergraph, coloring) -> CfReport:
    for x in h.points:
        _lookup(coloring, x)
    witnesses = [unique_color(coloring[x] for x in e) for e in h.edges]
    return CfReport(all(w is not None for w in witnesses), witnesses)


def find_violated_edges(h: Hypergraph, coloring) -> list[int]:
    return [i for i, w in enumerate(verify_cf(h, coloring).witnesses) if w is None]


def max_edge_intersection(h: Hypergraph) -> int:
    """Largest number of other edges (by index) that meet a single edge."""
    incident: dict[int, list[int]] = {}
    for i, e in enumerate(h.edges):
        for x in e:
            incident.setdefault(x, []).append(i)
    best = 0
    for i, e in enumerate(h.edges):
        met = set()
        for x in e:
            met.update(incident[x])
        met.discard(i)
        best = max(best, len(met))
    return best


def cf_color(h: Hypergraph, p: CfParams, seed: int) -> CfColoring:
    if not h.edges:
        raise ValueError("hypergraph has no edges")
    index = {x: i for i, x in enumerate(h.points)}
    edges = [[index[x] for x in e] for e in h.edges]
    incident: list[list[int]] = [[] for _ in h.points]
    for i, e in enumerate(edges):
        for x in e:
            incident[x].append(i)
    max_rounds = p.max_rounds_factor * (len(edges) + 1)
    base = palette_size(p)
    total_rounds = 0

    def violated(colors, i) -> bool:
        return unique_color([colors[x] for x in edges[i]]) is None

    for d in range(p.max_doublings + 1):
        K = base * 2**d
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(d,)))
        colors = rng.integers(0, K, size=len(h.points)).tolist()
        bad = {i for i in range(len(edges)) if violated(colors, i)}
        heap = sorted(bad)
        rounds = 0
        while bad and rounds < max_rounds:
            while heap[0] not in bad:
                heapq.heappop(heap)
            e = edges[heap[0]]
            for x, c in zip(e, rng.integers(0, K, size=len(e)).tolist()):
                colors[x] = c
            rounds += 1
            for j in {j for x in e for j in incident[x]}:
                if violated(colors, j):
                    if j not in bad:
                        bad.add(j)
                        heapq.heappush(heap, j)
                else:
                    bad.discard(j)
        total_rounds += rounds
        if not bad:
            result = CfColoring(
                {x: colors[i] for i, x in enumerate(h.points)}, K, total_rounds, d
            )
            assert verify_cf(h, result.colors).valid
            return result
    raise BudgetExhausted(total_rounds, len(bad), p.max_doublings, K)


def min_cf_colors(
    num_points: int, edges: Sequence[Sequence[int]], max_colors: int
) -> tuple[int, list[int]] | None:
    """Exact minimum over colourings of ``0..num_points-1`` making every edge conflict-free.

    Enumerates restricted-growth colourings (point 0 takes colour 0, each point
    may open at most one new colour) and prunes as soon as an edge whose last
    point is assigned has no unique colour. Returns ``(k, colouring)`` or None.
    """
    if num_points == 0:
        return (0, []) if not edges else None
    closing: list[list[Sequence[int]]] = [[] for _ in range(num_points)]
    for e in edges:
        closing[max(e)].append(e)
    colors = [0] * num_points

    def extend(pos: int, used: int, k: int) -> bool:
        if pos == num_points:
            return True
        for c in range(min(used + 1, k)):
            colors[pos] = c
            if all(unique_color(colors[x] for x in e) is not None for e in closing[pos]):
                if extend(pos + 1, max(used, c + 1), k):
                    return True
        return False

    for k in range(1, max_colors + 1):
        if extend(0, 0, k):
            return k, list(colors)
    return None


def exact_cf_number(h: Hypergraph, max_colors: int) -> int | None:
    """Conflict-free chromatic number of ``h``, or None if it exceeds ``max_colors``."""
    if len(h.points) > EXACT_MAX_POINTS:
        raise OracleSizeError(f"{len(h.points)} points exceeds the exhaustive limit of {EXACT_MAX_POINTS}")
    index = {x: i for i, x in enumerate(h.points)}
    found = min_cf_colors(len(h.points), [[index[x] for x in e] for e in h.edges], max_colors)
    return None if found is None else max(found[0], 1)
