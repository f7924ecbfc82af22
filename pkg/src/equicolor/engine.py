"""Equitable coloring of bipartite graphs with ceil(delta/2) + 1 classes.

Writing n = k*q + r, a coloring is built whose k classes are independent
sets, exactly r of them of size q+1 and the rest of size q. The pipeline:

1. rewrite the A-side size as a = x*q + u + M in a normalized form,
2. carve x+u... rather: cover a prefix of A with x pure classes (u of them
   big), split the residue M over t mixed classes, fill those greedily with
   unused B-vertices, shrink all but e of them back to size q, and cover the
   remaining B-vertices with pure classes.

Feasibility of a given t is decided by four arithmetic conditions; theorem
mode tries only t = floor(k/4), best-effort mode scans t = 0..k-x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .backend import get_kernel, resolve_backend
from .errors import (
    DegreeTooSmallError,
    InfeasibleSplitError,
    NoBVertexError,
    PreconditionViolation,
    SizeMismatchError,
)
from .graph import SIDE_A, SIDE_B, BipartiteGraph

MODE_THEOREM = "theorem"
MODE_BEST_EFFORT = "best_effort"
MODES = (MODE_THEOREM, MODE_BEST_EFFORT)

KIND_A_PURE = "A-pure"
KIND_MIXED = "mixed"
KIND_B_PURE = "B-pure"


def derive_parameters(n: int, delta: int) -> tuple[int, int, int]:
    """Class count and size profile: k = ceil(delta/2) + 1, n = k*q + r.

    Returns (k, q, r) with 0 <= r < k. Requires delta >= 2 and at least
    delta + 1 vertices (so q >= 1 always holds).
    """
    if delta < 2:
        raise DegreeTooSmallError(f"maximum degree must be at least 2, got {delta}")
    if n < delta + 1:
        raise PreconditionViolation(f"need n >= delta + 1, got n={n}, delta={delta}")
    k = (delta + 1) // 2 + 1
    q, r = divmod(n, k)
    assert q >= 1
    return k, q, r


@dataclass(frozen=True)
class ColoringParameters:
    """Scalars governing one coloring attempt at a fixed mixed-class count t.

    L is the B-side capacity term floor((b - t*(q+1)) / (delta - 1)), floored
    toward minus infinity; H = min(q, L) caps the per-class A-quota.
    """

    delta: int
    k: int
    q: int
    r: int
    a: int
    b: int
    t: int
    L: int
    H: int

    def __post_init__(self):
        if self.delta < 2:
            raise PreconditionViolation("delta must be at least 2")
        if self.k != (self.delta + 1) // 2 + 1:
            raise PreconditionViolation("k must equal ceil(delta/2) + 1")
        if not 0 <= self.r < self.k:
            raise PreconditionViolation("r must satisfy 0 <= r < k")
        if self.q < 1:
            raise PreconditionViolation("q must be at least 1")
        if self.a + self.b != self.k * self.q + self.r:
            raise PreconditionViolation("a + b must equal k*q + r")
        if self.t < 0:
            raise PreconditionViolation("t must be nonnegative")
        if self.H != min(self.q, self.L):
            raise PreconditionViolation("H must equal min(q, L)")


def capacity_term(b: int, t: int, q: int, delta: int) -> int:
    """L = floor((b - t*(q+1)) / (delta - 1)); negative numerators floor down."""
    return (b - t * (q + 1)) // (delta - 1)


def attempt_parameters(graph: BipartiteGraph, t: int) -> ColoringParameters:
    """Bundle the scalars for coloring ``graph`` with t mixed classes."""
    k, q, r = derive_parameters(graph.n, graph.max_degree)
    L = capacity_term(graph.b, t, q, graph.max_degree)
    return ColoringParameters(
        delta=graph.max_degree, k=k, q=q, r=r, a=graph.a, b=graph.b,
        t=t, L=L, H=min(q, L),
    )


@dataclass(frozen=True)
class NormalizationTrace:
    """Intermediate values of the normalization: trial split and correction."""

    x0: int
    m0: int
    l0: int
    d: int
    branch: str


@dataclass(frozen=True)
class NormalizedForm:
    """Decomposition a = x*q + u + M of the A-side size.

    For outputs of normalize(): 0 <= u <= x <= floor(k/2), u <= r,
    r - u <= k - x, and 0 <= M < q + k. The dataclass itself does not
    validate, so degenerate forms can be built directly for testing.
    """

    x: int
    u: int
    M: int
    trace: NormalizationTrace | None = None


def normalize(a: int, q: int, k: int, r: int) -> NormalizedForm:
    """Rewrite a = x*q + u + M with the bounds listed on NormalizedForm.

    Start from the trial split x0 = min(a // q, floor(k/2)), m0 = a - x0*q,
    l0 = max(0, x0 + r - k). If m0 >= l0 the form is direct; otherwise x is
    lowered by d = ceil((l0 - m0) / (q+1)), which raises the residue by
    d*(q+1) and lands it below q + 1.
    """
    if q < 1:
        raise PreconditionViolation(f"q must be at least 1, got {q}")
    if not 0 <= r < k:
        raise PreconditionViolation(f"need 0 <= r < k, got r={r}, k={k}")
    n = k * q + r
    if not 0 <= a <= n // 2:
        raise PreconditionViolation(f"need 0 <= a <= n/2, got a={a}, n={n}")
    x0 = min(a // q, k // 2)
    m0 = a - x0 * q
    l0 = max(0, x0 + r - k)
    if m0 >= l0:
        d = 0
        x, u, M = x0, l0, m0 - l0
        branch = "direct"
    else:
        d = (l0 - m0 + q) // (q + 1)
        x = x0 - d
        u = l0 - d
        M = m0 - l0 + d * (q + 1)
        branch = "corrected"
    assert x * q + u + M == a
    assert 0 <= u <= x <= k // 2
    assert u <= r
    assert r - u <= k - x
    assert 0 <= M < q + k
    return NormalizedForm(x=x, u=u, M=M, trace=NormalizationTrace(x0, m0, l0, d, branch))


@dataclass(frozen=True)
class FeasibilityReport:
    """The four arithmetic conditions for one attempt, with their inputs."""

    params: ColoringParameters
    nf: NormalizedForm
    surplus_ok: bool   # r - u <= k - x: room for the big B-pure classes
    mixed_ok: bool     # t <= k - x: room for the mixed classes
    cap_ok: bool       # H >= 0: each mixed class can reach size q+1
    load_ok: bool      # t*H >= M: the residue fits into the mixed classes

    @property
    def all_ok(self) -> bool:
        return self.surplus_ok and self.mixed_ok and self.cap_ok and self.load_ok

    def as_dict(self) -> dict:
        p, nf = self.params, self.nf
        return {
            "delta": p.delta, "k": p.k, "q": p.q, "r": p.r,
            "a": p.a, "b": p.b, "x": nf.x, "u": nf.u, "M": nf.M,
            "t": p.t, "L": p.L, "H": p.H,
            "conditions": {
                "r-u<=k-x": self.surplus_ok,
                "t<=k-x": self.mixed_ok,
                "H>=0": self.cap_ok,
                "t*H>=M": self.load_ok,
            },
            "feasible": self.all_ok,
        }


def feasibility(nf: NormalizedForm, params: ColoringParameters) -> FeasibilityReport:
    """Evaluate the four conditions; purely arithmetic, no graph access."""
    return FeasibilityReport(
        params=params,
        nf=nf,
        surplus_ok=params.r - nf.u <= params.k - nf.x,
        mixed_ok=params.t <= params.k - nf.x,
        cap_ok=params.H >= 0,
        load_ok=params.t * params.H >= nf.M,
    )


def split(M: int, t: int, H: int) -> tuple[int, ...]:
    """Balanced quotas summing to M over t slots, each at most H.

    Nonincreasing, entries differ by at most one: M = t*Q + R gives R slots
    of Q+1 followed by t-R slots of Q.
    """
    if t < 1:
        raise PreconditionViolation(f"t must be at least 1, got {t}")
    if M < 0 or H < 0:
        raise PreconditionViolation(f"M and H must be nonnegative, got M={M}, H={H}")
    if M > t * H:
        raise InfeasibleSplitError(f"cannot split M={M} over t={t} slots of height H={H}")
    Q, R = divmod(M, t)
    return tuple(Q + 1 if i < R else Q for i in range(t))


def choose_t(nf: NormalizedForm, a: int, b: int, delta: int,
             mode: str = MODE_BEST_EFFORT) -> tuple[int, int] | None:
    """Pick the mixed-class count, or None if no candidate is feasible.

    Theorem mode tries only t = floor(k/4); best-effort scans t = 0..k-x and
    returns the smallest feasible t. Returns (t, H).
    """
    k, q, r = derive_parameters(a + b, delta)
    if mode == MODE_THEOREM:
        candidates: Iterable[int] = (k // 4,)
    elif mode == MODE_BEST_EFFORT:
        candidates = range(0, k - nf.x + 1)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    for t in candidates:
        L = capacity_term(b, t, q, delta)
        params = ColoringParameters(delta=delta, k=k, q=q, r=r, a=a, b=b,
                                    t=t, L=L, H=min(q, L))
        if feasibility(nf, params).all_ok:
            return t, params.H
    return None


def cover_pure(vertices: Sequence[int], big_count: int, q: int) -> list[list[int]]:
    """Cut a vertex pool into consecutive classes, ``big_count`` of size q+1
    first, then classes of size q. The pool must divide exactly."""
    if q < 1:
        raise PreconditionViolation(f"q must be at least 1, got {q}")
    if big_count < 0:
        raise SizeMismatchError(f"big class count must be nonnegative, got {big_count}")
    rest = len(vertices) - big_count * (q + 1)
    if rest < 0 or rest % q != 0:
        raise SizeMismatchError(
            f"cannot cut {len(vertices)} vertices into {big_count} classes of "
            f"size {q + 1} plus classes of size {q}")
    out = []
    pos = 0
    for size in [q + 1] * big_count + [q] * (rest // q):
        out.append(list(vertices[pos:pos + size]))
        pos += size
    return out


def build_mixed_classes(graph: BipartiteGraph, r_vertices: Sequence[int],
                        quotas: Sequence[int], q: int, *,
                        backend: str | None = None) -> tuple[list[list[int]], int]:
    """Greedy fill of t classes of size q+1; class i holds quotas[i] vertices
    from ``r_vertices`` (consumed in order) plus previously unused B-vertices
    of lowest index not adjacent to them.

    Returns (classes, edge scan count). Each class lists its A-part first,
    then its B-part in ascending order.
    """
    quotas = list(quotas)
    r_vertices = list(r_vertices)
    if sum(quotas) != len(r_vertices):
        raise PreconditionViolation(
            f"quotas sum to {sum(quotas)} but {len(r_vertices)} residual vertices given")
    if any(s < 0 or s > q for s in quotas):
        raise PreconditionViolation(f"every quota must lie in [0, q={q}], got {quotas}")
    rv = np.asarray(r_vertices, dtype=np.int64)
    if rv.size and not (graph.side[rv] == SIDE_A).all():
        raise PreconditionViolation("residual vertices must all lie on side A")
    kernel = get_kernel(backend)
    flat, scans = kernel(graph.indptr, graph.indices, rv,
                         np.asarray(quotas, dtype=np.int64), graph.b_vertices, q)
    width = q + 1
    classes = [flat[i * width:(i + 1) * width].tolist() for i in range(len(quotas))]
    return classes, scans


def rebalance(classes: Sequence[Sequence[int]], e: int,
              b_side: frozenset[int] | set[int]) -> tuple[list[list[int]], list[int]]:
    """Keep the first e classes at size q+1; from each of the rest, delete its
    highest-index B-vertex. Returns (classes, deleted vertices ascending)."""
    if not 0 <= e <= len(classes):
        raise PreconditionViolation(f"need 0 <= e <= {len(classes)}, got e={e}")
    out = [list(c) for c in classes[:e]]
    returned = []
    for cls in classes[e:]:
        b_members = [v for v in cls if v in b_side]
        if not b_members:
            raise NoBVertexError(f"class {sorted(cls)} has no B-vertex to delete")
        drop = max(b_members)
        out.append([v for v in cls if v != drop])
        returned.append(drop)
    return out, sorted(returned)


@dataclass(frozen=True)
class ConstructionTrace:
    """Every scalar the construction committed to, plus the work counter."""

    k: int
    q: int
    r: int
    x: int
    u: int
    M: int
    t: int
    L: int
    H: int
    e: int
    y: int
    edge_scans: int


@dataclass(frozen=True)
class Cover:
    """A verified-shape equitable cover: k independent classes, r big."""

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    q: int
    r: int
    trace: ConstructionTrace | None = None

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def colors(self) -> list[int]:
        """Per-vertex class index; requires classes to partition 0..n-1."""
        out = [-1] * self.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def size_profile(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.classes))


@dataclass(frozen=True)
class Infeasible:
    """Outcome when no candidate t passes the four conditions."""

    mode: str
    reports: tuple[FeasibilityReport, ...]


def _class_kind(cls: Sequence[int], side: np.ndarray) -> str:
    kinds = {int(side[v]) for v in cls}
    if kinds == {SIDE_A}:
        return KIND_A_PURE
    if kinds == {SIDE_B}:
        return KIND_B_PURE
    return KIND_MIXED


def construct_cover(graph: BipartiteGraph, nf: NormalizedForm, t: int, H: int, *,
                    backend: str | None = None) -> Cover:
    """Build the full cover for a feasible (nf, t, H).

    Raises PreconditionViolation unless all four feasibility conditions hold
    (with H matching min(q, L) for this t).
    """
    params = attempt_parameters(graph, t)
    if params.H != H:
        raise PreconditionViolation(f"H={H} does not match min(q, L)={params.H} at t={t}")
    report = feasibility(nf, params)
    if not report.all_ok:
        raise PreconditionViolation(
            f"construction requires all feasibility conditions: {report.as_dict()['conditions']}")
    k, q, r = params.k, params.q, params.r
    a_list = graph.a_vertices.tolist()
    prefix = nf.x * q + nf.u
    a_pure = cover_pure(a_list[:prefix], nf.u, q)

    y = k - nf.x - t
    e = max(0, r - nf.u - y)
    scans = 0
    if t == 0:
        if nf.M != 0:
            raise PreconditionViolation(f"t=0 requires M=0, got M={nf.M}")
        mixed: list[list[int]] = []
    else:
        quotas = split(nf.M, t, H)
        mixed, scans = build_mixed_classes(graph, a_list[prefix:], quotas, q,
                                           backend=backend)
        b_side = frozenset(graph.b_vertices.tolist())
        mixed, _ = rebalance(mixed, e, b_side)

    covered_b = {v for cls in mixed for v in cls if graph.side[v] == SIDE_B}
    uncovered_b = [v for v in graph.b_vertices.tolist() if v not in covered_b]
    b_pure = cover_pure(uncovered_b, r - nf.u - e, q)

    classes = a_pure + mixed + b_pure
    assert len(classes) == k
    sizes = sorted(len(c) for c in classes)
    assert sizes == [q] * (k - r) + [q + 1] * r
    side = graph.side
    kinds = tuple(_class_kind(c, side) for c in classes)
    trace = ConstructionTrace(k=k, q=q, r=r, x=nf.x, u=nf.u, M=nf.M, t=t,
                              L=params.L, H=H, e=e, y=y, edge_scans=scans)
    return Cover(
        classes=tuple(tuple(sorted(c)) for c in classes),
        kinds=kinds, q=q, r=r, trace=trace,
    )


def color_equitably(graph: BipartiteGraph, mode: str = MODE_BEST_EFFORT, *,
                    backend: str | None = None) -> Cover | Infeasible:
    """End-to-end driver: parameters, normalization, t-selection, cover.

    Theorem mode evaluates only t = floor(k/4) and fails fast; best-effort
    scans t = 0..k-x and builds the cover for the smallest feasible t.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    resolve_backend(backend)
    k, q, r = derive_parameters(graph.n, graph.max_degree)
    nf = normalize(graph.a, q, k, r)
    if mode == MODE_THEOREM:
        candidates: Iterable[int] = (k // 4,)
    else:
        candidates = range(0, k - nf.x + 1)
    reports = []
    for t in candidates:
        report = feasibility(nf, attempt_parameters(graph, t))
        if report.all_ok:
            return construct_cover(graph, nf, t, report.params.H, backend=backend)
        reports.append(report)
    return Infeasible(mode=mode, reports=tuple(reports))
