"""Command-line entry point: ``cfcn {color,verify,exact,gen,bench,layers}``.

Exit codes: 0 success, 1 invalid colouring, 2 usage/parse/input error,
3 randomized colouring budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import GraphSpec, run_bench, summarize, write_csv
from .graph import GraphFormatError, format_edge_list, generate, read_edge_list
from .hypergraph import BudgetExhausted, OracleSizeError
from .oracle import exact_chi_cn, verify_cfcn
from .pipeline import coloring_document, cfcn_color, decompose_layers

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _load_graph(path):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _write(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    try:
        coloring, stats = cfcn_color(g, c1=args.c1, seed=args.seed)
    except BudgetExhausted as exc:
        raise CliError(str(exc), EXIT_BUDGET) from exc
    report = verify_cfcn(g, coloring.colors)
    if not report.valid:
        raise CliError(f"internal error: colouring fails at vertex {report.first_violation()}", EXIT_INVALID)
    _write(json.dumps(coloring_document(g, coloring, stats), indent=2) + "\n", args.out)
    return EXIT_OK


def _load_colors(path) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: not valid JSON ({exc})") from exc
    colors = doc.get("colors") if isinstance(doc, dict) else doc
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise CliError(f"{path}: expected a list of integer colours or a document with 'colors'")
    return colors


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    colors = _load_colors(args.coloring)
    if len(colors) != g.n:
        raise CliError(f"colouring has {len(colors)} entries but the graph has {g.n} vertices")
    report = verify_cfcn(g, colors)
    if report.valid:
        print(f"valid: {g.n} vertices, {len(set(colors))} colours")
        return EXIT_OK
    v = report.first_violation()
    print(f"invalid: vertex {v} has no uniquely coloured vertex in its closed neighbourhood")
    return EXIT_INVALID


def cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    try:
        k = exact_chi_cn(g, args.max_colors)
    except OracleSizeError as exc:
        raise CliError(str(exc)) from exc
    print("exceeds max" if k is None else k)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(args.kind, *args.params)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _write(format_edge_list(g), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    specs = []
    try:
        specs += [GraphSpec("regular", (args.n, d)) for d in args.deltas or []]
        for grid in args.gnp_grid or []:
            n, ps = grid.split(":")
            specs += [GraphSpec("gnp", (int(n), p)) for p in ps.split(",")]
        specs += [GraphSpec.parse(s) for s in args.graph or []]
        for s in specs:
            s.build(0)
    except ValueError as exc:
        raise CliError(f"bad sweep specification: {exc}") from exc
    records = run_bench(specs, args.seeds, c1=args.c1, baseline=args.baseline, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, sys.stdout)
    s = summarize(records)
    fmt = lambda x: "n/a" if x is None else f"{x:.4f}"  # noqa: E731
    print(
        f"runs={s['runs']} failures={s['failures']} max_ratio={fmt(s['max_ratio'])} "
        f"mean_ratio={fmt(s['mean_ratio'])}",
        file=sys.stderr if not args.out else sys.stdout,
    )
    failures = [r.failure for r in records if r.failure]
    if "invalid" in failures:
        return EXIT_INVALID
    if failures:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_layers(args) -> int:
    g = _load_graph(args.graph)
    d = decompose_layers(g)
    print(f"k_target={d.k_target} layers={len(d.layers)} stop={d.stop_reason}")
    for i, layer in enumerate(d.layers):
        print(f"layer {i}: |A|={len(layer.a)} |B|={len(layer.b)} |C|={len(layer.c)}")
        if args.verbose:
            print(f"  A={list(layer.a)}\n  B={list(layer.b)}\n  C={list(layer.c)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfcn", description="Closed-neighbourhood conflict-free colouring")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="colour an edge-list graph, write the JSON colouring document")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c1", type=float, default=4.0)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a colouring against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact chi_CN by exhaustive search (n <= 12)")
    p.add_argument("graph")
    p.add_argument("--max-colors", type=int, default=12)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("kind")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a sweep and write a CSV of colour counts")
    p.add_argument("--deltas", type=_int_list, help="target degrees for near-regular graphs, e.g. 4,16,64")
    p.add_argument("--n", type=int, default=512, help="vertex count for --deltas graphs")
    p.add_argument("--gnp-grid", action="append", help="N:P1,P2,... (repeatable)")
    p.add_argument("--graph", action="append", help="kind:arg:... e.g. path:50 (repeatable)")
    p.add_argument("--seeds", type=_int_list, default=[1])
    p.add_argument("--c1", type=float, default=4.0)
    p.add_argument("--out")
    p.add_argument("--baseline", action="store_true", help="also record greedy proper-colouring counts")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("layers", help="print the layer decomposition of a graph")
    p.add_argument("graph")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_layers)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"cfcn: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
