#!/usr/bin/env python3
"""Run the bound-shape sweep and pin its results in bench/baseline.json.

Re-run only when an intentional algorithm change moves the colour counts;
the acceptance suite allows 10% slack over the pinned max ratio.
"""
import argparse
import json
from pathlib import Path

from cfcn.bench import run_bench, summarize
from cfcn.corpora import BOUND_SEEDS, bound_specs
from cfcn.graph import generate
from cfcn.pipeline import cfcn_color

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=ROOT / "bench" / "baseline.json", type=Path)
    ap.add_argument("--c1", type=float, default=4.0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    recs = [r for r in run_bench(bound_specs(), BOUND_SEEDS, c1=args.c1, jobs=args.jobs)
            if 4 <= r.delta <= 256]
    s = summarize(recs)
    worst = max(recs, key=lambda r: r.ratio)
    _, stats = cfcn_color(generate("gnp", 500, 0.05, 1), c1=args.c1, seed=1)
    baseline = {
        "c1": args.c1,
        "bound_runs": s["runs"],
        "bound_max_ratio": round(s["max_ratio"], 6),
        "bound_mean_ratio": round(s["mean_ratio"], 6),
        "bound_worst_case": {"kind": worst.kind, "delta": worst.delta, "seed": worst.seed,
                             "total_colors": worst.total_colors},
        "zero_doubling_fraction": s["zero_doubling_fraction"],
        "gnp_500_0.05_seed1_total_colors": stats.total_colors,
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(baseline, indent=2) + "\n")
    print(json.dumps(baseline, indent=2))


if __name__ == "__main__":
    main()
