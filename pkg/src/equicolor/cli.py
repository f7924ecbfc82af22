"""Command line interface.

Exit codes: 0 success, 1 input error, 2 construction infeasible,
3 verification failure.
"""

from __future__ import annotations

import argparse
import io as _io
import json
import sys
from fractions import Fraction

from . import bench as bench_mod
from .backend import available_backends, resolve_backend
from .constants import compute_constants, parse_rational
from .engine import (
    MODE_BEST_EFFORT,
    MODE_THEOREM,
    Cover,
    Infeasible,
    color_equitably,
    derive_parameters,
)
from .errors import (
    DegreeTooSmallError,
    GraphFormatError,
    InvalidEdgeError,
    OddCycleError,
    TooLargeError,
    ZetaTooSmallError,
)
from .generator import GenSpec, generate_bipartite
from .graph import build_graph
from .io import (
    coloring_document,
    infeasible_document,
    read_coloring,
    read_graph,
    write_edge_list,
)
from .oracle import brute_chi_e, verify

_MODES = {"theorem": MODE_THEOREM, "best-effort": MODE_BEST_EFFORT,
          "best_effort": MODE_BEST_EFFORT}


def _emit(dest: str | None, text: str) -> None:
    if dest is None:
        sys.stdout.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def _report_lines(rep) -> str:
    d = rep.as_dict()
    conds = d["conditions"]
    flags = "  ".join(f"{name}: {'ok' if val else 'FAIL'}" for name, val in conds.items())
    return (f"t={d['t']} L={d['L']} H={d['H']} "
            f"(k={d['k']} q={d['q']} r={d['r']} x={d['x']} u={d['u']} M={d['M']})  {flags}")


def cmd_color(args) -> int:
    dedup = "warn" if args.dedup else "error"
    graph = build_graph(read_graph(args.graph, fmt=args.input_format, on_duplicate=dedup))
    mode = _MODES[args.mode]
    backend = resolve_backend(args.backend)
    outcome = color_equitably(graph, mode=mode, backend=backend)
    if isinstance(outcome, Infeasible):
        if args.format == "json":
            _emit(args.output, json.dumps(infeasible_document(graph, outcome), indent=2) + "\n")
        else:
            lines = [f"infeasible in mode {args.mode} (n={graph.n} delta={graph.max_degree})"]
            lines += [_report_lines(rep) for rep in outcome.reports]
            _emit(args.output, "\n".join(lines) + "\n")
        return 2
    k, q, r = derive_parameters(graph.n, graph.max_degree)
    report = verify(graph, outcome, k, q, r)
    if not report.all_ok:
        print(f"verification failed: {report.as_dict()}", file=sys.stderr)
        return 3
    if args.format == "json":
        doc = coloring_document(graph, outcome, report, args.mode, backend)
        _emit(args.output, json.dumps(doc, indent=2) + "\n")
    else:
        colors = outcome.colors()
        _emit(args.output, "".join(f"{v} {c}\n" for v, c in enumerate(colors)))
    return 0


def cmd_verify(args) -> int:
    dedup = "warn" if args.dedup else "error"
    graph = build_graph(read_graph(args.graph, fmt=args.input_format, on_duplicate=dedup))
    colors = read_coloring(args.coloring)
    missing = [v for v in range(graph.n) if v not in colors]
    extra = [v for v in colors if not 0 <= v < graph.n]
    if missing or extra:
        detail = []
        if missing:
            detail.append(f"uncolored vertices {missing[:5]}...")
        if extra:
            detail.append(f"unknown vertices {extra[:5]}...")
        raise GraphFormatError(f"{args.coloring}: {'; '.join(detail)}")
    values = sorted(set(colors.values()))
    classes = [[v for v in range(graph.n) if colors[v] == val] for val in values]
    k = len(classes)
    q, r = divmod(graph.n, k) if k else (0, 0)
    report = verify(graph, classes, k, q, r)
    for key, val in report.as_dict().items():
        print(f"{key}: {val}")
    return 0 if report.all_ok else 3


def cmd_chie(args) -> int:
    dedup = "warn" if args.dedup else "error"
    graph = build_graph(read_graph(args.graph, fmt=args.input_format, on_duplicate=dedup))
    result = brute_chi_e(graph, k_max=args.kmax, max_n=args.max_n)
    print("none" if result is None else result)
    return 0


def cmd_constants(args) -> int:
    res = compute_constants(parse_rational(args.zeta))
    print(f"zeta = {res.zeta}")
    print(f"K0 = {res.k0}")
    print(f"K = {res.k}")
    print(f"c = {res.c}")
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(n_a=args.na, n_b=args.nb, delta_cap=args.delta_cap,
                   p=parse_rational(args.p), seed=args.seed)
    raw = generate_bipartite(spec)
    write_edge_list(args.output, raw)
    print(f"wrote {args.output}: n={raw.n} m={raw.m}", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    backend = resolve_backend(args.backend)
    records = bench_mod.run_bench(sizes, parse_rational(args.zeta), args.seed,
                                  mode=_MODES[args.mode], backend=backend)
    if args.output is None:
        buf = _io.StringIO()
        buf.write(",".join(bench_mod.CSV_FIELDS) + "\n")
        for rec in records:
            buf.write(f"{rec.n},{rec.m},{rec.delta},{rec.wall_time_ns},"
                      f"{rec.edge_scans},{rec.outcome}\n")
        sys.stdout.write(buf.getvalue())
    else:
        bench_mod.write_csv(args.output, records)
    for rec in records:
        print(f"n={rec.n} m={rec.m} delta={rec.delta} "
              f"time={rec.wall_time_ns / 1e9:.3f}s scans={rec.edge_scans} {rec.outcome}",
              file=sys.stderr)
    return 0


def _add_graph_arg(sub) -> None:
    sub.add_argument("graph", help="graph file (edge list or DIMACS .col)")
    sub.add_argument("--input-format", choices=("auto", "edgelist", "dimacs"),
                     default="auto")
    sub.add_argument("--dedup", action="store_true",
                     help="drop duplicate edges with a warning instead of failing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equicolor",
        description="Equitable colorings of bipartite graphs with ceil(delta/2)+1 classes.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("color", help="construct an equitable coloring")
    _add_graph_arg(p)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.add_argument("--mode", choices=("theorem", "best-effort"), default="best-effort")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--backend", choices=("auto",) + available_backends(), default="auto")
    p.set_defaults(func=cmd_color)

    p = subs.add_parser("verify", help="check a coloring file against a graph")
    _add_graph_arg(p)
    p.add_argument("coloring", help="coloring file (text 'v c' lines or JSON)")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("chie", help="brute-force equitable chromatic number (n <= 16)")
    _add_graph_arg(p)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--max-n", type=int, default=16)
    p.set_defaults(func=cmd_chie)

    p = subs.add_parser("constants", help="degree thresholds for a density ratio")
    p.add_argument("zeta", help="rational > 41/2, e.g. '21' or '41/2+1/10'")
    p.set_defaults(func=cmd_constants)

    p = subs.add_parser("gen", help="sample a random bipartite instance")
    p.add_argument("output", help="edge list output path")
    p.add_argument("--na", type=int, required=True)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--delta-cap", type=int, required=True)
    p.add_argument("--p", required=True, help="edge probability, rational or decimal")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser("bench", help="time the pipeline over seeded instances")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--zeta", default="21")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("theorem", "best-effort"), default="theorem")
    p.add_argument("--backend", choices=("auto",) + available_backends(), default="auto")
    p.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (GraphFormatError, InvalidEdgeError, OddCycleError, TooLargeError,
            ZetaTooSmallError, DegreeTooSmallError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
