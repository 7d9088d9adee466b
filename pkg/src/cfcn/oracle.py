"""Ground truth for closed-neighbourhood conflict-free colourings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .hypergraph import EXACT_MAX_POINTS, OracleSizeError, min_cf_colors, unique_color

EXACT_MAX_VERTICES = EXACT_MAX_POINTS


@dataclass
class CfcnReport:
    valid: bool
    # per vertex: lowest colour seen exactly once in N[v], or None
    witnesses: list[int | None]

    def first_violation(self) -> int | None:
        return next((v for v, w in enumerate(self.witnesses) if w is None), None)


def verify_cfcn(g: Graph, colors: Sequence[int]) -> CfcnReport:
    if len(colors) != g.n:
        raise ValueError(f"colouring has {len(colors)} entries for a graph on {g.n} vertices")
    for v, c in enumerate(colors):
        if c is None:
            raise ValueError(f"vertex {v} is uncoloured")
    witnesses = [unique_color([colors[v], *(colors[u] for u in g.adj[v])]) for v in range(g.n)]
    return CfcnReport(all(w is not None for w in witnesses), witnesses)


def exact_chi_cn(g: Graph, max_colors: int = EXACT_MAX_VERTICES) -> int | None:
    """Smallest k admitting a CFCN colouring, or None if none exists with ``max_colors``."""
    if g.n > EXACT_MAX_VERTICES:
        raise OracleSizeError(f"graph has {g.n} vertices; exact search is limited to {EXACT_MAX_VERTICES}")
    if g.n == 0:
        return 1
    found = min_cf_colors(g.n, [g.closed_neighborhood(v) for v in range(g.n)], max_colors)
    return None if found is None else found[0]


def greedy_cfcn_baseline(g: Graph) -> list[int]:
    """First-fit proper colouring; each vertex is then its own witness."""
    colors = [-1] * g.n
    for v in range(g.n):
        taken = {colors[u] for u in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors
