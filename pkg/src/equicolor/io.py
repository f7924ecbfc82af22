"""Readers and writers: edge lists, DIMACS .col, colorings, JSON documents."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

import numpy as np

from .engine import Cover, Infeasible
from .errors import GraphFormatError
from .graph import BipartiteGraph, RawGraph, raw_graph
from .oracle import VerificationReport


def read_edge_list(path, *, on_duplicate: str = "error") -> RawGraph:
    """Plain format: first line 'n m', then m lines 'u v', vertices 0-based."""
    tokens = Path(path).read_text().split()
    if len(tokens) < 2:
        raise GraphFormatError(f"{path}: missing 'n m' header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphFormatError(f"{path}: header must be two integers") from None
    if m < 0 or len(tokens) != 2 + 2 * m:
        raise GraphFormatError(
            f"{path}: expected {m} edges ({2 * m} endpoints), found {len(tokens) - 2} tokens")
    try:
        flat = np.array(tokens[2:], dtype=np.int64)
    except ValueError:
        raise GraphFormatError(f"{path}: non-integer edge token") from None
    return raw_graph(n, flat.reshape(-1, 2), on_duplicate=on_duplicate)


def write_edge_list(path, raw: RawGraph) -> None:
    with open(path, "w") as fh:
        fh.write(f"{raw.n} {raw.m}\n")
        for u, v in raw.edges.tolist():
            fh.write(f"{u} {v}\n")


def read_dimacs(path, *, on_duplicate: str = "error") -> RawGraph:
    """DIMACS .col: 'c' comments, one 'p edge N M' line, then 'e u v' 1-based."""
    n = m = None
    pairs: list[tuple[int, int]] = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                if n is not None:
                    raise GraphFormatError(f"{path}:{lineno}: second 'p' line")
                if len(parts) != 4 or parts[1] != "edge":
                    raise GraphFormatError(f"{path}:{lineno}: expected 'p edge N M'")
                try:
                    n, m = int(parts[2]), int(parts[3])
                except ValueError:
                    raise GraphFormatError(f"{path}:{lineno}: non-integer sizes") from None
            elif parts[0] == "e":
                if n is None:
                    raise GraphFormatError(f"{path}:{lineno}: 'e' line before 'p' line")
                if len(parts) != 3:
                    raise GraphFormatError(f"{path}:{lineno}: expected 'e u v'")
                try:
                    pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
                except ValueError:
                    raise GraphFormatError(f"{path}:{lineno}: non-integer endpoint") from None
            else:
                raise GraphFormatError(f"{path}:{lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError(f"{path}: no 'p edge' line")
    if len(pairs) != m:
        raise GraphFormatError(f"{path}: 'p' line declares {m} edges, found {len(pairs)}")
    return raw_graph(n, pairs, on_duplicate=on_duplicate)


def read_graph(path, *, fmt: str = "auto", on_duplicate: str = "error") -> RawGraph:
    """Dispatch on format; 'auto' keys on the .col suffix or a leading c/p line."""
    if fmt == "auto":
        p = Path(path)
        if p.suffix == ".col":
            fmt = "dimacs"
        else:
            head = ""
            with open(p) as fh:
                for line in fh:
                    if line.strip():
                        head = line.split()[0]
                        break
            fmt = "dimacs" if head in ("c", "p") else "edgelist"
    if fmt == "dimacs":
        return read_dimacs(path, on_duplicate=on_duplicate)
    if fmt == "edgelist":
        return read_edge_list(path, on_duplicate=on_duplicate)
    raise ValueError(f"unknown graph format {fmt!r}; expected auto, edgelist, or dimacs")


def read_coloring(path) -> dict[int, int]:
    """Vertex -> color map from either the text format ('v c' lines) or a
    JSON document carrying a 'colors' array."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"{path}: invalid JSON: {exc}") from None
        colors = doc["colors"] if isinstance(doc, dict) else doc
        if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
            raise GraphFormatError(f"{path}: JSON coloring needs an integer 'colors' array")
        return {v: c for v, c in enumerate(colors)}
    out: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"{path}:{lineno}: expected 'vertex color'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"{path}:{lineno}: non-integer token") from None
        if v in out:
            raise GraphFormatError(f"{path}:{lineno}: vertex {v} colored twice")
        out[v] = c
    return out


def write_coloring_text(path, colors: Mapping[int, int] | list[int]) -> None:
    items = enumerate(colors) if isinstance(colors, list) else sorted(colors.items())
    with open(path, "w") as fh:
        for v, c in items:
            fh.write(f"{v} {c}\n")


def coloring_document(graph: BipartiteGraph, cover: Cover,
                      report: VerificationReport, mode: str, backend: str) -> dict:
    """Everything about a successful run, JSON-serializable."""
    tr = cover.trace
    params = None
    if tr is not None:
        params = {"k": tr.k, "q": tr.q, "r": tr.r, "x": tr.x, "u": tr.u,
                  "M": tr.M, "t": tr.t, "L": tr.L, "H": tr.H, "e": tr.e, "y": tr.y}
    return {
        "n": graph.n, "m": graph.m, "a": graph.a, "b": graph.b,
        "delta": graph.max_degree, "mode": mode, "backend": backend,
        "parameters": params,
        "edge_scans": None if tr is None else tr.edge_scans,
        "classes": [list(c) for c in cover.classes],
        "kinds": list(cover.kinds),
        "colors": cover.colors(),
        "verification": report.as_dict(),
    }


def infeasible_document(graph: BipartiteGraph, outcome: Infeasible) -> dict:
    return {
        "n": graph.n, "m": graph.m, "a": graph.a, "b": graph.b,
        "delta": graph.max_degree, "mode": outcome.mode,
        "infeasible": True,
        "reports": [rep.as_dict() for rep in outcome.reports],
    }


def write_json(path, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
