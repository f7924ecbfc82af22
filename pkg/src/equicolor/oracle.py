"""Independent verification and small-instance ground truth.

verify() re-checks a proposed coloring straight from the adjacency arrays and
never calls into the construction pipeline. The brute_* functions do
exhaustive search with symmetry reduction and are capped at 16 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .engine import Cover
from .errors import TooLargeError
from .graph import SIDE_A, SIDE_B, BipartiteGraph

ORACLE_MAX_N = 16


@dataclass(frozen=True)
class VerificationReport:
    """Independent booleans about a proposed class list."""

    proper: bool            # no class contains an edge
    partition: bool         # classes are disjoint and cover every vertex
    class_count_ok: bool    # exactly k classes
    size_profile: tuple[int, ...]
    equitable: bool         # sizes differ by at most one
    exact_profile_ok: bool  # exactly r classes out of k have size q+1, rest q

    @property
    def all_ok(self) -> bool:
        return (self.proper and self.partition and self.class_count_ok
                and self.equitable and self.exact_profile_ok)

    def as_dict(self) -> dict:
        return {
            "proper": self.proper,
            "partition": self.partition,
            "class_count_ok": self.class_count_ok,
            "size_profile": list(self.size_profile),
            "equitable": self.equitable,
            "exact_profile_ok": self.exact_profile_ok,
            "all_ok": self.all_ok,
        }


def _as_classes(cover: Cover | Iterable[Iterable[int]]) -> list[list[int]]:
    if isinstance(cover, Cover):
        return [list(c) for c in cover.classes]
    return [list(c) for c in cover]


def verify(graph: BipartiteGraph, cover: Cover | Iterable[Iterable[int]],
           k: int, q: int, r: int) -> VerificationReport:
    """Check a proposed coloring against (k, q, r), straight from adjacency."""
    classes = _as_classes(cover)
    n = graph.n
    sizes = tuple(sorted(len(c) for c in classes))
    class_count_ok = len(classes) == k
    equitable = (max(sizes) - min(sizes) <= 1) if sizes else True
    exact_profile_ok = sizes == tuple([q] * (k - r) + [q + 1] * r)

    counts = np.zeros(n, dtype=np.int64)
    in_range = True
    for cls in classes:
        for v in cls:
            if 0 <= v < n:
                counts[v] += 1
            else:
                in_range = False
    partition = in_range and bool((counts == 1).all())

    if partition:
        class_of = np.empty(n, dtype=np.int64)
        for i, cls in enumerate(classes):
            for v in cls:
                class_of[v] = i
        left = np.repeat(np.arange(n, dtype=np.int64), np.diff(graph.indptr))
        proper = not bool((class_of[left] == class_of[graph.indices]).any())
    else:
        proper = True
        for cls in classes:
            members = {v for v in cls if 0 <= v < n}
            for v in members:
                if any(int(w) in members for w in graph.neighbors(v)):
                    proper = False
                    break
            if not proper:
                break

    return VerificationReport(
        proper=proper, partition=partition, class_count_ok=class_count_ok,
        size_profile=sizes, equitable=equitable, exact_profile_ok=exact_profile_ok,
    )


def _check_size(graph: BipartiteGraph, max_n: int) -> None:
    if graph.n > max_n:
        raise TooLargeError(f"oracle capped at {max_n} vertices, got {graph.n}")


def _backtrack_equitable(n: int, adj: Sequence[Sequence[int]], k: int) -> list[int] | None:
    """Exhaustive search for an equitable proper k-coloring; None if none.

    Vertices are assigned in descending-degree order. Two completeness
    preserving reductions: among empty classes only the first of each
    capacity is tried, and a vertex whose open neighborhood equals an
    earlier vertex's may not take a smaller class index than it.
    """
    q, r = divmod(n, k)
    caps = [q + 1] * r + [q] * (k - r)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    signature = {v: frozenset(adj[v]) for v in range(n)}
    prev_twin: dict[int, int] = {}
    last_by_sig: dict[frozenset, int] = {}
    for v in order:
        s = signature[v]
        if s in last_by_sig:
            prev_twin[v] = last_by_sig[s]
        last_by_sig[s] = v

    assign = [-1] * n
    sizes = [0] * k

    def bt(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        lo = 0
        tw = prev_twin.get(v)
        if tw is not None and assign[tw] >= 0:
            lo = assign[tw]
        seen_empty: set[int] = set()
        for c in range(lo, k):
            if sizes[c] >= caps[c]:
                continue
            if sizes[c] == 0:
                if caps[c] in seen_empty:
                    continue
                seen_empty.add(caps[c])
            if any(assign[w] == c for w in adj[v]):
                continue
            assign[v] = c
            sizes[c] += 1
            if bt(i + 1):
                return True
            assign[v] = -1
            sizes[c] -= 1
        return False

    return assign if bt(0) else None


def _cover_from_assignment(graph: BipartiteGraph, assign: Sequence[int], k: int) -> Cover:
    from .engine import KIND_A_PURE, KIND_B_PURE, KIND_MIXED  # avoid cycle at import

    q, r = divmod(graph.n, k)
    buckets: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(assign):
        buckets[c].append(v)
    buckets.sort(key=lambda cls: (-len(cls), cls))
    kinds = []
    for cls in buckets:
        s = {int(graph.side[v]) for v in cls}
        kinds.append(KIND_A_PURE if s == {SIDE_A} else KIND_B_PURE if s == {SIDE_B} else KIND_MIXED)
    return Cover(classes=tuple(tuple(c) for c in buckets), kinds=tuple(kinds), q=q, r=r)


def brute_equitable_k(graph: BipartiteGraph, k: int, *, max_n: int = ORACLE_MAX_N) -> Cover | None:
    """Ground-truth witness for an equitable k-coloring, or None."""
    _check_size(graph, max_n)
    if not 1 <= k <= max(graph.n, 1):
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={graph.n}")
    assign = _backtrack_equitable(graph.n, graph.adjacency, k)
    return None if assign is None else _cover_from_assignment(graph, assign, k)


def brute_chi_e(graph: BipartiteGraph, *, k_max: int | None = None,
                max_n: int = ORACLE_MAX_N) -> int | None:
    """Least k <= k_max admitting an equitable k-coloring; None if none does.

    With the default k_max = n the answer is never None (singletons work).
    """
    _check_size(graph, max_n)
    if graph.n == 0:
        return 0
    limit = graph.n if k_max is None else min(k_max, graph.n)
    for k in range(1, limit + 1):
        if _backtrack_equitable(graph.n, graph.adjacency, k) is not None:
            return k
    return None


def brute_normal_forms(a: int, q: int, k: int, r: int) -> set[tuple[int, int, int]]:
    """All (x, u, M) with a = x*q + u + M satisfying the normalized bounds."""
    out = set()
    for x in range(0, k // 2 + 1):
        for u in range(0, min(x, r) + 1):
            if r - u > k - x:
                continue
            M = a - x * q - u
            if 0 <= M < q + k:
                out.add((x, u, M))
    return out
