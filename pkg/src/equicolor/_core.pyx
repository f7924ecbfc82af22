# cython: language_level=3
"""Compiled greedy fill kernel; see _core_py.mixed_fill for the contract.

Vertex choices and the scan counter must stay in lockstep with the pure twin.
"""

import numpy as np

from equicolor.errors import ExhaustedBError


def mixed_fill(indptr, indices, r_vertices, quotas, b_vertices, q):
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const long long[::1] rv = np.ascontiguousarray(r_vertices, dtype=np.int64)
    cdef const long long[::1] s = np.ascontiguousarray(quotas, dtype=np.int64)
    cdef const long long[::1] bv = np.ascontiguousarray(b_vertices, dtype=np.int64)
    cdef Py_ssize_t t = s.shape[0]
    cdef Py_ssize_t nb = bv.shape[0]
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef long long qq = q

    out_arr = np.zeros(t * (qq + 1), dtype=np.int64)
    mark_arr = np.zeros(n, dtype=np.int64)
    used_arr = np.zeros(nb, dtype=np.uint8)
    cdef long long[::1] out = out_arr
    cdef long long[::1] mark = mark_arr
    cdef unsigned char[::1] used = used_arr

    cdef long long scans = 0
    cdef Py_ssize_t cursor = 0, rpos = 0, opos = 0
    cdef Py_ssize_t i, j, bi
    cdef long long epoch, si, need, v, w, p

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
        need = qq + 1 - si
        bi = cursor
        while need > 0:
            if bi >= nb:
                raise ExhaustedBError(f"class {i}: B-pool exhausted with {need} slots open")
            scans += 1
            w = bv[bi]
            if used[bi] == 0 and mark[w] != epoch:
                used[bi] = 1
                out[opos] = w
                opos += 1
                need -= 1
            bi += 1
        while cursor < nb and used[cursor] == 1:
            cursor += 1
    return out_arr, int(scans)
