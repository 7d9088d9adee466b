"""Closed-neighbourhood conflict-free colouring with O(log^2 Delta) colours.

Layer i takes a maximal distance-3+ set A_i of the residual graph and gives
it colour i; every vertex of A_i and of its neighbourhood B_i then sees that
colour exactly once. The residual graph is the subgraph induced on C_i. After
at most ``iteration_cap(Delta) + 1`` layers, any surviving vertex v has a
neighbour in every B_i, so the sets ``N(v) & (B_0 | ... | B_k)`` form a
hypergraph with large edges that can be conflict-free coloured with a palette
disjoint from the layer colours. Everything still uncoloured gets one last
fresh colour.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .decomposition import AbcPartition, ConsistencyError, maximal_distance3_set, partition_abc
from .graph import Graph, induced_subgraph, max_degree
from .hypergraph import CfParams, Hypergraph, cf_color, max_edge_intersection

GRAPH_EMPTY = "graph-empty"
CAP_REACHED = "cap-reached"


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[AbcPartition, ...]  # original graph ids
    k_target: int
    stop_reason: str

    @property
    def residual(self) -> tuple[int, ...]:
        return self.layers[-1].c if self.layers else ()


@dataclass
class CfcnColoring:
    colors: list[int]
    layer_colors: list[int]
    hypergraph_colors: list[int]
    fresh_color: int | None

    @property
    def total_colors(self) -> int:
        return len(self.layer_colors) + len(self.hypergraph_colors) + (self.fresh_color is not None)

    def ledger(self) -> dict:
        return {
            "layer_colors": self.layer_colors,
            "hypergraph_colors": self.hypergraph_colors,
            "fresh_color": self.fresh_color,
        }


@dataclass
class CfcnRunStats:
    delta: int
    k_target: int
    layers: int
    stop_reason: str
    K: int  # hypergraph palette size, 0 when that stage did not run
    doublings: int
    rounds: int
    total_colors: int
    seed: int

    def as_dict(self) -> dict:
        return asdict(self)


def iteration_cap(delta: int) -> int:
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if delta <= 1:
        return 1
    return math.ceil(4 * math.log2(delta))


def theorem_parameters(delta: int) -> tuple[int, int]:
    """Hypergraph-theorem parameters (t, gamma) = (floor(2 log2 delta), delta^2)."""
    if delta < 2:
        raise ValueError("hypergraph parameters need delta >= 2")
    return max(1, math.floor(2 * math.log2(delta))), delta * delta


def decompose_layers(g: Graph, k_target: int | None = None) -> LayerDecomposition:
    """Peel layers 0, 1, ... until the residual graph is empty or layer ``k_target`` is done."""
    k = iteration_cap(max_degree(g)) if k_target is None else k_target
    layers = []
    residual = list(range(g.n))
    sub = g
    while residual:
        part = partition_abc(sub, maximal_distance3_set(sub))
        # sub vertex j is original vertex residual[j]
        layer = AbcPartition(
            tuple(residual[j] for j in part.a),
            tuple(residual[j] for j in part.b),
            tuple(residual[j] for j in part.c),
        )
        layers.append(layer)
        residual = list(layer.c)
        if residual and len(layers) == k + 1:
            return LayerDecomposition(tuple(layers), k, CAP_REACHED)
        sub, _ = induced_subgraph(g, residual)
    return LayerDecomposition(tuple(layers), k, GRAPH_EMPTY)


def build_residual_hypergraph(g: Graph, d: LayerDecomposition) -> Hypergraph:
    """One edge ``N(v) & (B_0 | ... | B_k)`` per vertex v left over after the last layer."""
    if d.stop_reason != CAP_REACHED or not d.residual:
        raise ValueError("hypergraph stage needs a decomposition that hit the cap with survivors")
    points = sorted(v for layer in d.layers for v in layer.b)
    is_point = bytearray(g.n)
    for v in points:
        is_point[v] = 1
    edges = [tuple(u for u in g.adj[v] if is_point[u]) for v in d.residual]
    for v, e in zip(d.residual, edges):
        if len(e) < d.k_target + 1:
            raise ConsistencyError(
                f"residual vertex {v} meets only {len(e)} B-vertices, expected >= {d.k_target + 1}"
            )
    h = Hypergraph(tuple(points), tuple(edges), tuple(d.residual))
    delta = max_degree(g)
    if max_edge_intersection(h) > delta * delta:
        raise ConsistencyError("residual hypergraph edge meets more than delta^2 others")
    return h


def cfcn_color(
    g: Graph, c1: float = 4.0, seed: int = 0, k_target: int | None = None, **cf_kwargs
) -> tuple[CfcnColoring, CfcnRunStats]:
    """Colour ``g`` so every closed neighbourhood has a uniquely coloured vertex.

    ``k_target`` overrides the layer cap (tests use a small cap to reach the
    hypergraph stage on small graphs). Extra keyword arguments go to
    :class:`CfParams`. Raises :class:`~cfcn.hypergraph.BudgetExhausted` if the
    hypergraph stage fails.
    """
    delta = max_degree(g)
    d = decompose_layers(g, k_target)
    colors: list[int | None] = [None] * g.n
    for i, layer in enumerate(d.layers):
        for v in layer.a:
            colors[v] = i
    n_layers = len(d.layers)
    layer_colors = list(range(n_layers))
    hyper_colors: list[int] = []
    K = doublings = rounds = 0

    if d.stop_reason == CAP_REACHED:
        h = build_residual_hypergraph(g, d)
        t, gamma_bound = theorem_parameters(delta)
        measured = max_edge_intersection(h)
        assert measured <= gamma_bound
        cf = cf_color(h, CfParams(t, max(2, measured), c1=c1, **cf_kwargs), seed)
        K, doublings, rounds = cf.K, cf.doublings_used, cf.rounds_used
        # pack only the colours actually drawn, keeping their relative order
        used = sorted(set(cf.colors.values()))
        relabel = {c: n_layers + i for i, c in enumerate(used)}
        for x, c in cf.colors.items():
            colors[x] = relabel[c]
        hyper_colors = [relabel[c] for c in used]

    fresh = None
    if any(c is None for c in colors):
        fresh = n_layers + len(hyper_colors)
        colors = [fresh if c is None else c for c in colors]

    out = CfcnColoring(colors, layer_colors, hyper_colors, fresh)
    total = out.total_colors
    assert total == (max(colors) + 1 if colors else 0)
    assert total <= (d.k_target + 1) + max(K, 0) + 1
    stats = CfcnRunStats(delta, d.k_target, n_layers, d.stop_reason, K, doublings, rounds, total, seed)
    return out, stats


def coloring_document(g: Graph, coloring: CfcnColoring, stats: CfcnRunStats) -> dict:
    """Serializable record: n, colours, palette ledger and run stats."""
    s = stats.as_dict()
    return {
        "n": g.n,
        "colors": coloring.colors,
        "ledger": coloring.ledger(),
        "stats": {key: s[key] for key in
                  ("k_target", "layers", "K", "doublings", "rounds", "total_colors", "seed",
                   "delta", "stop_reason")},
    }
