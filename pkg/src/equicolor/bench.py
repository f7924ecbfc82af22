"""Scaling benchmark over seeded random instances.

Each record times build + color + verify (generation and file IO excluded)
and carries the kernel's edge-scan counter, so quadratic scaling and the
work bound |E| + t*|B| can be checked from the CSV alone.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from fractions import Fraction

from .constants import parse_rational
from .engine import MODE_THEOREM, Cover, color_equitably, derive_parameters
from .generator import GenSpec, generate_bipartite
from .graph import build_graph
from .oracle import verify

CSV_FIELDS = ("n", "m", "delta", "wall_time_ns", "edge_scans", "outcome")

BENCH_SIDE_A = 64


@dataclass(frozen=True)
class BenchRecord:
    n: int
    m: int
    delta: int
    wall_time_ns: int
    edge_scans: int
    outcome: str


def instance_spec(n: int, zeta: Fraction, seed: int) -> GenSpec:
    """Bench instance recipe: a small A side of 64 vertices, degree cap
    floor(n / zeta), edge probability slightly above cap/|B| so the cap
    binds and the realized max degree equals it."""
    if n < 4 * BENCH_SIDE_A:
        raise ValueError(f"bench sizes below {4 * BENCH_SIDE_A} not supported, got {n}")
    n_a = BENCH_SIDE_A
    n_b = n - n_a
    cap = int(Fraction(n) / Fraction(zeta))
    p = min(Fraction(1), Fraction(103, 100) * cap / n_b)
    inst_seed = (seed * 1000003 + n) % 2 ** 64
    return GenSpec(n_a=n_a, n_b=n_b, delta_cap=cap, p=p, seed=inst_seed)


def run_one(n: int, zeta: Fraction, seed: int, *, mode: str = MODE_THEOREM,
            backend: str | None = None) -> BenchRecord:
    raw = generate_bipartite(instance_spec(n, zeta, seed))
    start = time.perf_counter_ns()
    graph = build_graph(raw)
    outcome = color_equitably(graph, mode=mode, backend=backend)
    if isinstance(outcome, Cover):
        k, q, r = derive_parameters(graph.n, graph.max_degree)
        report = verify(graph, outcome, k, q, r)
        label = "ok" if report.all_ok else "verify-failed"
        scans = outcome.trace.edge_scans
    else:
        label = "infeasible"
        scans = 0
    elapsed = time.perf_counter_ns() - start
    return BenchRecord(n=graph.n, m=graph.m, delta=graph.max_degree,
                       wall_time_ns=elapsed, edge_scans=scans, outcome=label)


def run_bench(sizes: list[int], zeta: Fraction | str, seed: int, *,
              mode: str = MODE_THEOREM, backend: str | None = None) -> list[BenchRecord]:
    z = zeta if isinstance(zeta, Fraction) else parse_rational(str(zeta))
    return [run_one(n, z, seed, mode=mode, backend=backend) for n in sizes]


def write_csv(path, records: list[BenchRecord]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for rec in records:
            writer.writerow([rec.n, rec.m, rec.delta, rec.wall_time_ns,
                             rec.edge_scans, rec.outcome])


def read_csv(path) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [BenchRecord(n=int(r["n"]), m=int(r["m"]), delta=int(r["delta"]),
                        wall_time_ns=int(r["wall_time_ns"]),
                        edge_scans=int(r["edge_scans"]), outcome=r["outcome"])
            for r in rows]
