"""Pure-Python twin of the compiled greedy fill kernel.

Semantics (vertex choices and the scan counter) are kept identical to
``_core.pyx``; the backend selector treats the two as interchangeable.
"""

from __future__ import annotations

import numpy as np

from .errors import ExhaustedBError


def mixed_fill(indptr, indices, r_vertices, quotas, b_vertices, q):
    """Fill t classes of size q+1 from residual A-vertices plus fresh B-vertices.

    Class i takes the next quotas[i] vertices of ``r_vertices`` (consumed in
    order), marks their neighbors, then scans ``b_vertices`` in ascending
    order picking the lowest-index vertices that are unused and unmarked.

    Returns (flat int64 array of length t*(q+1), scan count). The counter
    adds one per neighbor marked and one per candidate slot inspected; the
    skip cursor over the used prefix is linear bookkeeping and not counted.

    Raises ExhaustedBError if the B-pool runs dry (impossible when the
    feasibility conditions hold).
    """
    ip = indptr.tolist()
    idx = indices.tolist()
    rv = r_vertices.tolist()
    s = quotas.tolist()
    bv = b_vertices.tolist()
    t = len(s)
    nb = len(bv)
    n = len(ip) - 1
    out = [0] * (t * (q + 1))
    mark = [0] * n
    used = [False] * nb
    scans = 0
    cursor = 0
    rpos = 0
    opos = 0
    for i in range(t):
        epoch = i + 1
        si = s[i]
        for j in range(rpos, rpos + si):
            v = rv[j]
            out[opos] = v
            opos += 1
            for p in range(ip[v], ip[v + 1]):
                mark[idx[p]] = epoch
                scans += 1
        rpos += si
        need = q + 1 - si
        bi = cursor
        while need > 0:
            if bi >= nb:
                raise ExhaustedBError(f"class {i}: B-pool exhausted with {need} slots open")
            scans += 1
            w = bv[bi]
            if not used[bi] and mark[w] != epoch:
                used[bi] = True
                out[opos] = w
                opos += 1
                need -= 1
            bi += 1
        while cursor < nb and used[cursor]:
            cursor += 1
    return np.array(out, dtype=np.int64), scans
