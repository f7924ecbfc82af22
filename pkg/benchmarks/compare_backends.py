#!/usr/bin/env python3
"""Compare the compiled mixed-fill kernel against the pure-Python fallback.

Generates one seeded instance per size with the benchmark recipe, colors it
with each available backend, and reports the best-of-N coloring time. Graph
construction and verification are kept outside the timed region so the
numbers isolate the construction pass. Covers must match exactly across
backends; the script fails loudly if they ever diverge.

Usage:
    python3 benchmarks/compare_backends.py [--sizes 20000,40000,80000]
        [--seed 7] [--zeta 21] [--repeat 3]
"""

from __future__ import annotations

import argparse
import sys
import time

from equicolor import (
    MODE_THEOREM,
    Cover,
    build_graph,
    color_equitably,
    generate_bipartite,
)
from equicolor.backend import available_backends
from equicolor.bench import instance_spec
from equicolor.constants import parse_rational


def time_backend(graph, backend: str, repeat: int) -> tuple[Cover, float]:
    best = float("inf")
    cover = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = color_equitably(graph, mode=MODE_THEOREM, backend=backend)
        best = min(best, time.perf_counter() - start)
        if not isinstance(result, Cover):
            sys.exit(f"instance declined by the engine: {result}")
        cover = result
    return cover, best


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="20000,40000,80000")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--zeta", default="21")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",") if s]
    zeta = parse_rational(args.zeta)
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled kernel not built; timing the fallback only")

    header = f"{'n':>8} {'m':>10} {'t':>6}"
    for be in backends:
        header += f" {be + ' (ms)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for n in sizes:
        graph = build_graph(generate_bipartite(instance_spec(n, zeta, args.seed)))
        covers = {}
        times = {}
        for be in backends:
            covers[be], times[be] = time_backend(graph, be, args.repeat)
        if len(covers) == 2 and covers["python"] != covers["native"]:
            sys.exit(f"backend covers diverge at n={n}")
        row = f"{graph.n:>8} {graph.m:>10} {covers[backends[0]].trace.t:>6}"
        for be in backends:
            row += f" {times[be] * 1e3:>14.3f}"
        if len(backends) == 2:
            row += f" {times['python'] / times['native']:>8.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
