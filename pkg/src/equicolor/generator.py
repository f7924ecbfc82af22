"""Seeded random bipartite instances with a hard degree cap."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import RawGraph, raw_graph


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one random instance.

    Vertices 0..n_a-1 form one side, n_a..n_a+n_b-1 the other. Each of the
    n_a * n_b cross pairs is an edge independently with probability p; a trim
    pass then enforces max degree <= delta_cap.
    """

    n_a: int
    n_b: int
    delta_cap: int
    p: Fraction
    seed: int

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise ValueError("side sizes must be nonnegative")
        if self.delta_cap < 0:
            raise ValueError("degree cap must be nonnegative")
        if not 0 <= Fraction(self.p) <= 1:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


def generate_bipartite(spec: GenSpec) -> RawGraph:
    """Sample the instance; deterministic per spec (PCG64 stream).

    Edges above the cap are deleted in vertex index order, each overfull
    vertex dropping its highest-index incident edges first. Removals only
    lower degrees, so one pass suffices.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n = spec.n_a + spec.n_b
    p = float(spec.p)
    rows = []
    for u in range(spec.n_a):
        hits = np.flatnonzero(rng.random(spec.n_b) < p).astype(np.int64)
        if hits.size:
            rows.append(np.column_stack((np.full(hits.size, u, dtype=np.int64),
                                         hits + spec.n_a)))
    if rows:
        edges = np.concatenate(rows)
    else:
        edges = np.empty((0, 2), dtype=np.int64)

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges.tolist():
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(nbrs) for nbrs in adj]
    removed: set[tuple[int, int]] = set()
    for v in range(n):
        if deg[v] <= spec.delta_cap:
            continue
        for w in sorted(adj[v], reverse=True):
            if deg[v] <= spec.delta_cap:
                break
            key = (v, w) if v < w else (w, v)
            if key in removed:
                continue
            removed.add(key)
            deg[v] -= 1
            deg[w] -= 1
    if removed:
        keep = [i for i, (u, v) in enumerate(edges.tolist()) if (u, v) not in removed]
        edges = edges[keep]
    return raw_graph(n, edges)
