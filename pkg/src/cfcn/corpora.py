"""Fixed graph corpora for the soundness, optimality and bound-shape sweeps."""

from __future__ import annotations

import random

from .bench import GraphSpec

GNP_SIZES = (50, 200, 500)
GNP_PROBS = (0.01, 0.05, 0.1, 0.3)
GNP_SEEDS = (1, 2, 3, 4, 5)
PIPELINE_SEEDS = (1, 2, 3)

BOUND_N = 512
BOUND_DEGREES = (4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256)
BOUND_SEEDS = (1, 2, 3, 4, 5)


def soundness_graphs() -> list[tuple[GraphSpec, int]]:
    """300 (spec, graph seed) pairs: 240 structured graphs with n <= 1000 plus 60 G(n, p)."""
    rng = random.Random(20240601)
    out = []
    for kind in ("path", "cycle", "star"):
        for n in sorted(rng.sample(range(1, 1001), 60)):
            # star takes a leaf count
            out.append((GraphSpec(kind, (n - 1 if kind == "star" else n,)), 0))
    for _ in range(60):
        r = rng.randint(1, 31)
        c = rng.randint(1, 1000 // r)
        out.append((GraphSpec("grid", (r, c)), 0))
    for n in GNP_SIZES:
        for p in GNP_PROBS:
            for seed in GNP_SEEDS:
                out.append((GraphSpec("gnp", (n, p)), seed))
    return out


def observation_graphs(count: int = 1000, max_n: int = 200) -> list[tuple[GraphSpec, int]]:
    rng = random.Random(7)
    probs = (0.005, 0.01, 0.02, 0.05, 0.1, 0.2)
    return [(GraphSpec("gnp", (rng.randint(1, max_n), rng.choice(probs))), i) for i in range(count)]


def trap_fixtures() -> list[GraphSpec]:
    """Graphs that survive the full layer cap; see :func:`cfcn.graph.layer_trap_graph`."""
    return [GraphSpec("trap", (m, hubs)) for m in (24, 26, 30, 40) for hubs in (1, 2, 5)]


def small_corpus() -> list[GraphSpec]:
    """40 graphs on at most 9 vertices."""
    specs = [GraphSpec("complete", (n,)) for n in range(2, 7)]
    specs += [GraphSpec("path", (4,)), GraphSpec("cycle", (4,)), GraphSpec("star", (4,))]
    specs += [GraphSpec("path", (n,)) for n in (1, 2, 3, 5, 6, 7, 8, 9)]
    specs += [GraphSpec("cycle", (n,)) for n in (3, 5, 6, 7, 8, 9)]
    specs += [GraphSpec("star", (n,)) for n in (1, 2, 3, 5, 8)]
    specs += [GraphSpec("grid", rc) for rc in ((2, 2), (2, 3), (2, 4), (3, 3))]
    specs += [GraphSpec("trap", (m, 1)) for m in (2, 3, 4)]
    specs += [GraphSpec("gnp", (n, p)) for n, p in ((7, 0.3), (8, 0.4), (9, 0.5), (9, 0.25), (8, 0.6), (9, 0.7))]
    assert len(specs) == 40
    return specs


def bound_specs() -> list[GraphSpec]:
    """Near-regular graphs and G(n, p) tuned to the same expected degree."""
    specs = [GraphSpec("regular", (BOUND_N, d)) for d in BOUND_DEGREES]
    specs += [GraphSpec("gnp", (BOUND_N, round(d / (BOUND_N - 1), 6))) for d in BOUND_DEGREES]
    return specs
