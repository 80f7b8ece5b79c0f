# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""

import numpy as np
cimport numpy as cnp

from altenum.kernels._pykernels import coloring_masks

ctypedef long long i64


cdef i64 _inv(i64 x, i64 p) noexcept nogil:
    cdef i64 r = 1, b = x % p, e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef int _rref(i64[:, ::1] m, int ncols, i64 p, int* pivots) noexcept nogil:
    cdef int nrows = m.shape[0]
    cdef int r = 0, col, i, j, piv
    cdef i64 f, inv, t
    for i in range(nrows):
        for j in range(ncols):
            t = m[i, j] % p
            if t < 0:
                t += p
            m[i, j] = t
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                t = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = t
        if m[r, col] != 1:
            inv = _inv(m[r, col], p)
            for j in range(ncols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(nrows):
            if i != r:
                f = m[i, col]
                if f != 0:
                    for j in range(ncols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
                        if m[i, j] < 0:
                            m[i, j] += p
        pivots[r] = col
        r += 1
    return r


def rref_mod_p(a, int ncols, long long p):
    cdef cnp.ndarray arr = np.array(a, dtype=np.int64, ndmin=2, order="C")
    if arr.shape[0] == 0:
        return (), ()
    cdef i64[:, ::1] m = arr
    cdef int[64] piv_buf
    cdef int[:] piv_view
    cdef int rank
    if ncols > 64:
        piv_view = np.empty(ncols, dtype=np.intc)
        rank = _rref(m, ncols, p, &piv_view[0])
        pivots = tuple(piv_view[k] for k in range(rank))
    else:
        rank = _rref(m, ncols, p, piv_buf)
        pivots = tuple(piv_buf[k] for k in range(rank))
    rows = tuple(tuple(int(x) for x in arr[k, :ncols]) for k in range(rank))
    return rows, pivots


def rank_mod_p(a, int ncols, long long p):
    cdef cnp.ndarray arr = np.array(a, dtype=np.int64, ndmin=2, order="C")
    if arr.shape[0] == 0:
        return 0
    cdef i64[:, ::1] m = arr
    cdef int[:] piv_view = np.empty(max(ncols, 1), dtype=np.intc)
    return _rref(m, ncols, p, &piv_view[0])


def graph_census(int n, long long lo, long long hi):
    cdef int ne = n * (n - 1) // 2
    cdef int[64] ei, ej
    cdef int i, j, k = 0, v, iso
    cdef long long g
    cdef long long adj[16]
    cdef long long seen, frontier, nxt, f, low, full = (1 << n) - 1
    cdef long long connected = 0, no_isolated = 0, both = 0
    cdef bint conn
    if n > 11:
        raise ValueError("graph_census supports n <= 11")
    for i in range(n):
        for j in range(i + 1, n):
            ei[k] = i
            ej[k] = j
            k += 1
    with nogil:
        g = lo
        while g < hi:
            for v in range(n):
                adj[v] = 0
            for k in range(ne):
                if (g >> k) & 1:
                    adj[ei[k]] |= 1LL << ej[k]
                    adj[ej[k]] |= 1LL << ei[k]
            iso = 0
            for v in range(n):
                if adj[v] == 0:
                    iso = 1
                    break
            if n == 0:
                conn = True
            else:
                seen = 1
                frontier = 1
                while frontier:
                    nxt = 0
                    f = frontier
                    while f:
                        low = f & -f
                        v = 0
                        while (low >> v) != 1:
                            v += 1
                        nxt |= adj[v]
                        f ^= low
                    frontier = nxt & ~seen
                    seen |= nxt
                conn = seen == full
            if conn:
                connected += 1
            if not iso:
                no_isolated += 1
                if conn:
                    both += 1
            g += 1
    return int(connected), int(no_isolated), int(both)


def colored_pairs(int n, int c, long long lo, long long hi):
    cdef cnp.ndarray marr = np.array(coloring_masks(n, c), dtype=np.int64)
    cdef long long[::1] masks = marr
    cdef Py_ssize_t nm = marr.shape[0], t
    cdef long long g, total = 0
    with nogil:
        g = lo
        while g < hi:
            for t in range(nm):
                if (g & masks[t]) == 0:
                    total += 1
            g += 1
    return int(total)
