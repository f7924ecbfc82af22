"""Bipartite graph construction with canonical side labeling.

Vertices are integers 0..n-1. Adjacency is stored in compressed sparse row
form (``indptr``/``indices``) with each neighbor list sorted ascending, which
is what the coloring kernels consume directly.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import DuplicateEdgeError, InvalidEdgeError, OddCycleError

SIDE_A = 0
SIDE_B = 1


@dataclass(frozen=True, eq=False)
class RawGraph:
    """Validated undirected edge list, not yet oriented into sides.

    ``edges`` is an (m, 2) int64 array in canonical form: u < v within each
    row, rows sorted lexicographically, no duplicates.
    """

    n: int
    edges: np.ndarray

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}


def raw_graph(n: int, edges: Sequence | np.ndarray, *, on_duplicate: str = "error") -> RawGraph:
    """Validate and canonicalize an edge list.

    Rejects self-loops and out-of-range endpoints. Duplicate edges raise
    DuplicateEdgeError by default; with ``on_duplicate="warn"`` they are
    dropped with a warning instead.
    """
    if n < 0:
        raise InvalidEdgeError(f"vertex count must be nonnegative, got {n}")
    if on_duplicate not in ("error", "warn"):
        raise ValueError(f"on_duplicate must be 'error' or 'warn', got {on_duplicate!r}")
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidEdgeError("edges must be pairs of vertex ids")
    if arr.size:
        if int(arr.min()) < 0 or int(arr.max()) >= n:
            bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
            raise InvalidEdgeError(f"edge {tuple(int(x) for x in bad)} out of range for n={n}")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise InvalidEdgeError(f"self-loop at vertex {v}")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    canon = np.column_stack((lo[order], hi[order]))
    if canon.shape[0] > 1:
        dup = (np.diff(canon[:, 0]) == 0) & (np.diff(canon[:, 1]) == 0)
        if dup.any():
            u, v = (int(x) for x in canon[1:][dup][0])
            if on_duplicate == "error":
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            warnings.warn(f"dropping {int(dup.sum())} duplicate edge(s), first ({u}, {v})")
            keep = np.concatenate(([True], ~dup))
            canon = canon[keep]
    canon.setflags(write=False)
    return RawGraph(n=n, edges=canon)


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Immutable bipartite graph with a canonical A/B side for every vertex."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    side: np.ndarray
    a: int
    b: int
    max_degree: int

    @property
    def m(self) -> int:
        return int(self.indices.shape[0]) // 2

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @cached_property
    def a_vertices(self) -> np.ndarray:
        out = np.flatnonzero(self.side == SIDE_A).astype(np.int64)
        out.setflags(write=False)
        return out

    @cached_property
    def b_vertices(self) -> np.ndarray:
        out = np.flatnonzero(self.side == SIDE_B).astype(np.int64)
        out.setflags(write=False)
        return out

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists as plain tuples; convenient for small graphs."""
        ip = self.indptr.tolist()
        idx = self.indices.tolist()
        return tuple(tuple(idx[ip[v]:ip[v + 1]]) for v in range(self.n))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once as (u, v) with u < v, sorted."""
        ip = self.indptr.tolist()
        idx = self.indices.tolist()
        for u in range(self.n):
            for j in range(ip[u], ip[u + 1]):
                if idx[j] > u:
                    yield (u, idx[j])


def _path_to_root(v: int, parent: list[int]) -> list[int]:
    path = [v]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def _odd_cycle(v: int, w: int, parent: list[int]) -> list[int]:
    # Conflict edge (v, w) inside one BFS tree; splice parent paths at the
    # lowest common ancestor to get a simple closed walk of odd edge length.
    rv = _path_to_root(v, parent)[::-1]
    rw = _path_to_root(w, parent)[::-1]
    j = 0
    while j < len(rv) and j < len(rw) and rv[j] == rw[j]:
        j += 1
    return rv[j - 1:] + rw[j - 1:][::-1]


def two_color(n: int, indptr: Sequence[int], indices: Sequence[int]) -> tuple[list[int], list[int]]:
    """BFS 2-coloring of every component.

    Returns (component id per vertex, color in {0, 1} per vertex); the root
    of each component is its smallest vertex and gets color 0. Raises
    OddCycleError with a cycle witness if the graph is not bipartite.
    """
    comp = [-1] * n
    color = [-1] * n
    parent = [-1] * n
    ncomp = 0
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        comp[root] = ncomp
        queue = deque([root])
        while queue:
            v = queue.popleft()
            cv = color[v]
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if color[w] < 0:
                    color[w] = 1 - cv
                    comp[w] = ncomp
                    parent[w] = v
                    queue.append(w)
                elif color[w] == cv:
                    raise OddCycleError(_odd_cycle(v, w, parent))
        ncomp += 1
    return comp, color


def canonicalize_sides(comp: Sequence[int], color: Sequence[int]) -> np.ndarray:
    """Turn a per-component 2-coloring into canonical A/B side labels.

    Within each component the larger color class becomes B; on a tie the
    class containing the component's smallest vertex becomes A. Isolated
    vertices therefore land in B. If the resulting global sizes had a > b
    the labels would be swapped wholesale (the per-component rule already
    guarantees a <= b, so this is a safety net).
    """
    n = len(comp)
    ncomp = max(comp, default=-1) + 1
    counts = [[0, 0] for _ in range(ncomp)]
    min_vertex_color = [-1] * ncomp
    for v in range(n):
        c = comp[v]
        counts[c][color[v]] += 1
        if min_vertex_color[c] < 0:
            min_vertex_color[c] = color[v]
    # a_color[c]: which color plays side A in component c
    a_color = []
    for c in range(ncomp):
        c0, c1 = counts[c]
        if c0 > c1:
            a_color.append(1)
        elif c1 > c0:
            a_color.append(0)
        else:
            a_color.append(min_vertex_color[c])
    side = np.empty(n, dtype=np.uint8)
    for v in range(n):
        side[v] = SIDE_A if color[v] == a_color[comp[v]] else SIDE_B
    a_count = int((side == SIDE_A).sum())
    if a_count > n - a_count:
        side = (1 - side).astype(np.uint8)
    side.setflags(write=False)
    return side


def build_graph(raw: RawGraph) -> BipartiteGraph:
    """Orient a validated edge list into a canonical bipartite graph.

    Raises OddCycleError (with witness) when the graph is not bipartite.
    """
    n = raw.n
    e = raw.edges
    u_all = np.concatenate((e[:, 0], e[:, 1]))
    v_all = np.concatenate((e[:, 1], e[:, 0]))
    order = np.lexsort((v_all, u_all))
    indices = np.ascontiguousarray(v_all[order], dtype=np.int64)
    deg = np.bincount(u_all, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indptr.setflags(write=False)
    indices.setflags(write=False)

    comp, color = two_color(n, indptr.tolist(), indices.tolist())
    side = canonicalize_sides(comp, color)
    a = int((side == SIDE_A).sum())
    return BipartiteGraph(
        n=n,
        indptr=indptr,
        indices=indices,
        side=side,
        a=a,
        b=n - a,
        max_degree=int(deg.max()) if n else 0,
    )
