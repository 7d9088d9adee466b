"""Degree-sweep benchmark: colour many graphs, re-verify, tabulate colours against log^2 Delta."""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import generate, max_degree
from .hypergraph import BudgetExhausted
from .oracle import greedy_cfcn_baseline, verify_cfcn
from .pipeline import cfcn_color, iteration_cap

CSV_HEADER = [
    "kind", "n", "p", "seed", "delta", "k_target", "total_colors", "baseline_colors",
    "K", "doublings", "rounds", "wall_time_ms", "ratio",
]

SEEDED_KINDS = {"gnp", "regular"}


@dataclass(frozen=True)
class GraphSpec:
    """A generator call; seeded kinds take the run seed as their final argument."""

    kind: str
    args: tuple

    def build(self, seed: int):
        args = (*self.args, seed) if self.kind in SEEDED_KINDS else self.args
        return generate(self.kind, *args)

    @property
    def p(self) -> str:
        return str(self.args[1]) if self.kind == "gnp" else ""

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        """``kind:arg:arg``, e.g. ``path:50``, ``grid:10:20``, ``gnp:200:0.05``."""
        kind, *args = text.split(":")
        spec = cls(kind, tuple(args))
        spec.build(0)  # fail early on bad parameters
        return spec


@dataclass
class BenchRecord:
    kind: str
    n: int
    p: str
    seed: int
    delta: int = 0
    k_target: int = 0
    total_colors: int | None = None
    baseline_colors: int | None = None
    K: int = 0
    doublings: int = 0
    rounds: int = 0
    wall_time_ms: float = 0.0
    failure: str | None = None  # "budget" or "invalid"

    @property
    def ratio(self) -> float | None:
        if self.delta < 2 or self.total_colors is None:
            return None
        return self.total_colors / math.log2(self.delta) ** 2

    def csv_row(self) -> list[str]:
        ratio = self.ratio
        return [
            self.kind, str(self.n), self.p, str(self.seed), str(self.delta), str(self.k_target),
            f"FAIL:{self.failure}" if self.failure else str(self.total_colors),
            "" if self.baseline_colors is None else str(self.baseline_colors),
            str(self.K), str(self.doublings), str(self.rounds), f"{self.wall_time_ms:.3f}",
            "" if ratio is None else f"{ratio:.6f}",
        ]


def run_cell(spec: GraphSpec, seed: int, c1: float = 4.0, baseline: bool = False) -> BenchRecord:
    g = spec.build(seed)
    delta = max_degree(g)
    rec = BenchRecord(spec.kind, g.n, spec.p, seed, delta, iteration_cap(delta))
    if baseline:
        rec.baseline_colors = len(set(greedy_cfcn_baseline(g)))
    start = time.perf_counter()
    try:
        coloring, stats = cfcn_color(g, c1=c1, seed=seed)
    except BudgetExhausted:
        rec.wall_time_ms = (time.perf_counter() - start) * 1000
        rec.failure = "budget"
        return rec
    rec.wall_time_ms = (time.perf_counter() - start) * 1000
    if not verify_cfcn(g, coloring.colors).valid:
        rec.failure = "invalid"
        return rec
    rec.total_colors = stats.total_colors
    rec.K, rec.doublings, rec.rounds = stats.K, stats.doublings, stats.rounds
    return rec


def _run_cell_args(args):
    return run_cell(*args)


def run_bench(
    specs: Sequence[GraphSpec], seeds: Sequence[int], c1: float = 4.0,
    baseline: bool = False, jobs: int = 1,
) -> list[BenchRecord]:
    """One record per (spec, seed), in spec-major order whatever ``jobs`` is."""
    cells = [(s, seed, c1, baseline) for s in specs for seed in seeds]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_cell_args, cells))
    return [run_cell(*cell) for cell in cells]


def write_csv(records: Iterable[BenchRecord], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        w.writerow(rec.csv_row())


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def summarize(records: Sequence[BenchRecord]) -> dict:
    ratios = [r.ratio for r in records if r.ratio is not None and r.failure is None]
    return {
        "runs": len(records),
        "failures": sum(r.failure is not None for r in records),
        "max_ratio": max(ratios) if ratios else None,
        "mean_ratio": sum(ratios) / len(ratios) if ratios else None,
        "zero_doubling_fraction": (
            sum(r.doublings == 0 for r in records if r.failure is None) / len(records) if records else None
        ),
    }
