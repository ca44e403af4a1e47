# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (see _kernels_py.py for the reference versions)."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

DEF MAXN = 16


cdef struct ColorState:
    int n
    int ncolors
    int nedges
    int nparts
    int lo[MAXN]
    int color[MAXN]
    int mult[MAXN + 1]
    long long *keys
    long long *table


cdef inline long long _leaf_key(ColorState *st) nogil:
    cdef int buf[MAXN + 1]
    cdef int k = 0, i, j, t
    cdef long long key = 0
    for i in range(st.ncolors):
        if st.mult[i] > 0:
            buf[k] = st.mult[i]
            k += 1
    # insertion sort, descending
    for i in range(1, k):
        t = buf[i]
        j = i - 1
        while j >= 0 and buf[j] < t:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = t
    for i in range(k):
        key = key * (st.n + 1) + buf[i]
    return key


cdef void _color_rec(ColorState *st, int v, int asc) nogil:
    cdef int c, u, cu, a, ok, p
    cdef long long key
    if v == st.n:
        key = _leaf_key(st)
        for p in range(st.nparts):
            if st.keys[p] == key:
                st.table[p * (st.nedges + 1) + asc] += 1
                return
        return
    for c in range(st.ncolors):
        a = asc
        ok = 1
        for u in range(st.lo[v], v):
            cu = st.color[u]
            if cu == c:
                ok = 0
                break
            if cu < c:
                a += 1
        if ok:
            st.color[v] = c
            st.mult[c] += 1
            _color_rec(st, v + 1, a)
            st.mult[c] -= 1


def _partitions(int n, int max_part):
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def coloring_counts(h, int ncolors):
    cdef ColorState st
    cdef int n = len(h)
    cdef int v, u, p
    cdef long long key
    if n > MAXN or ncolors > MAXN:
        raise ValueError("kernel supports at most %d vertices and colors" % MAXN)
    hv = [int(x) for x in h]
    memset(&st, 0, sizeof(ColorState))
    st.n = n
    st.ncolors = ncolors
    st.nedges = sum(hv) - n * (n + 1) // 2
    for v in range(n):
        u = 0
        while u < v and hv[u] < v + 1:
            u += 1
        st.lo[v] = u
    parts = [lam for lam in _partitions(n, n) if len(lam) <= ncolors]
    st.nparts = len(parts)
    st.keys = <long long *> malloc(max(st.nparts, 1) * sizeof(long long))
    st.table = <long long *> calloc(max(st.nparts, 1) * (st.nedges + 1), sizeof(long long))
    if st.keys == NULL or st.table == NULL:
        free(st.keys)
        free(st.table)
        raise MemoryError()
    try:
        for p, lam in enumerate(parts):
            key = 0
            for x in lam:
                key = key * (n + 1) + x
            st.keys[p] = key
        if n == 0:
            st.table[0] = 1
        else:
            with nogil:
                _color_rec(&st, 0, 0)
        out = {}
        for p, lam in enumerate(parts):
            row = [st.table[p * (st.nedges + 1) + k] for k in range(st.nedges + 1)]
            if any(row):
                out[lam] = row
        return out
    finally:
        free(st.keys)
        free(st.table)


cdef int _next_perm(int *a, int m) nogil:
    """Lexicographic next permutation; returns 0 after the last one."""
    cdef int i = m - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = m - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return 1


def rook_counts(int m, lam):
    cdef int perm[MAXN]
    cdef int inv[MAXN]
    cdef char inlam[MAXN][MAXN]
    cdef int r, c, i, jin, w, rin, maxw
    cdef long long *counts
    if m > MAXN:
        raise ValueError("kernel supports boards up to %d" % MAXN)
    lv = [int(x) for x in lam] + [0] * m
    for r in range(m):
        for c in range(m):
            inlam[r][c] = 1 if c < lv[m - 1 - r] else 0
    maxw = m * m
    counts = <long long *> calloc((m + 1) * (maxw + 1), sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    try:
        for c in range(m):
            perm[c] = c
        with nogil:
            while True:
                for c in range(m):
                    inv[perm[c]] = c
                jin = 0
                w = 0
                for c in range(m):
                    r = perm[c]
                    rin = inlam[r][c]
                    if rin:
                        jin += 1
                    for i in range(m):
                        if inv[i] > c:
                            if inlam[i][c]:
                                if rin and r < i:
                                    w += 1
                            elif rin or r < i:
                                w += 1
                counts[jin * (maxw + 1) + w] += 1
                if m == 0 or not _next_perm(perm, m):
                    break
        return [[counts[j * (maxw + 1) + k] for k in range(maxw + 1)] for j in range(m + 1)]
    finally:
        free(counts)
