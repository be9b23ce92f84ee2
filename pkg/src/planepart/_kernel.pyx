# cython: language_level=3
"""Compiled signed-count kernel for generated pattern rows."""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef struct State:
    int n
    int c
    int width
    int* a          # full rows, row i at offset i * width
    long long* counts
    long nmin
    long span


cdef void _fill(State* st, int i, int t, long norm, int inv, int odd) nogil:
    cdef int n = st.n
    cdef int* up = st.a + (i + 1) * st.width
    cdef int* row = st.a + i * st.width
    cdef int w, e, lo, hi, x, ninv
    cdef int last = n - i + 1
    if t == last:
        if i != 1 and row[t] > st.c:
            inv += 1
        if i == 1:
            if inv & 1:
                st.counts[odd * st.span + (norm - st.nmin)] -= 1
            else:
                st.counts[odd * st.span + (norm - st.nmin)] += 1
        else:
            _fill(st, i - 1, 0, norm, inv, 0)
        return
    w = up[t]
    e = up[t + 1]
    if w <= e:
        lo = w
        hi = e
    else:
        lo = e + 1
        hi = w - 1
    for x in range(lo, hi + 1):
        row[t + 1] = x
        ninv = inv
        if i != 1 and row[t] > x:
            ninv += 1
        _fill(st, i, t + 1, norm + x, ninv, odd + (x & 1))


def count_completions(top, int r, int n, int c):
    """Signed counts keyed by (odd entries of row 1, norm of generated rows)."""
    cdef int m = len(top)
    if m != n - r:
        raise ValueError("top row length must be n - r")
    if r == 0:
        return {(sum(int(x) & 1 for x in top), 0): 1}
    cdef int bmin = min([0] + list(top))
    cdef int bmax = max([c] + list(top))
    cdef long cells = 0
    cdef int i, j
    for i in range(1, r + 1):
        cells += n - i + 1
    cdef State st
    st.n = n
    st.c = c
    st.width = n + 2
    st.nmin = cells * bmin
    st.span = cells * (bmax - bmin) + 1
    st.a = <int*> calloc((r + 2) * st.width, sizeof(int))
    st.counts = <long long*> calloc((n + 1) * st.span, sizeof(long long))
    if st.a == NULL or st.counts == NULL:
        free(st.a)
        free(st.counts)
        raise MemoryError()
    cdef int* toprow = st.a + (r + 1) * st.width
    for i in range(1, r + 2):
        st.a[i * st.width + n - i + 2] = c
    for j in range(m):
        toprow[j + 1] = top[j]
    with nogil:
        _fill(&st, r, 0, 0, 0, 0)
    out = {}
    cdef long k
    cdef long long v
    for i in range(n + 1):
        for k in range(st.span):
            v = st.counts[i * st.span + k]
            if v:
                out[(i, k + st.nmin)] = v
    free(st.a)
    free(st.counts)
    return out
