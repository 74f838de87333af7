# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free elimination on int64 row sets.

Intermediate products are formed in 128-bit arithmetic; a quotient that does
not fit in int64 raises OverflowError so the caller can retry with the
arbitrary-precision fallback.
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef int128 I64_MAX = 9223372036854775807
cdef int128 I64_MIN = -9223372036854775807 - 1


cdef inline int _step(int64_t piv, int64_t a, int64_t x, int64_t y, int64_t prev, int64_t *out) nogil:
    cdef int128 t = <int128>piv * x - <int128>a * y
    t = t / prev
    if t > I64_MAX or t < I64_MIN:
        return -1
    out[0] = <int64_t>t
    return 0


cdef int _echelon(const int64_t[:, ::1] mat, long *idx, Py_ssize_t k_rows, int64_t *work,
                  int *pcols) nogil:
    """Eliminate rows ``idx`` in place in ``work``; returns rank or -1 on overflow."""
    cdef Py_ssize_t d = mat.shape[1]
    cdef Py_ssize_t i, j, c, p, k = 0
    cdef int64_t prev = 1, piv, a, tmp
    for i in range(k_rows):
        for j in range(d):
            work[i * d + j] = mat[idx[i], j]
    for c in range(d):
        if k == k_rows:
            break
        p = k
        while p < k_rows and work[p * d + c] == 0:
            p += 1
        if p == k_rows:
            continue
        if p != k:
            for j in range(d):
                tmp = work[k * d + j]
                work[k * d + j] = work[p * d + j]
                work[p * d + j] = tmp
        piv = work[k * d + c]
        for i in range(k + 1, k_rows):
            a = work[i * d + c]
            for j in range(c + 1, d):
                if _step(piv, a, work[i * d + j], work[k * d + j], prev, &work[i * d + j]) < 0:
                    return -1
            work[i * d + c] = 0
        pcols[k] = <int>c
        prev = piv
        k += 1
    return <int>k


cdef int _in_span(const int64_t[:, ::1] mat, Py_ssize_t row, int64_t *work, int *pcols,
                  int rank, int64_t *v) nogil:
    """1 if ``mat[row]`` lies in the span of the eliminated rows, 0 if not, -1 on overflow."""
    cdef Py_ssize_t d = mat.shape[1]
    cdef Py_ssize_t j, k
    cdef int64_t prev = 1, piv, a
    cdef int c
    for j in range(d):
        v[j] = mat[row, j]
    for k in range(rank):
        c = pcols[k]
        piv = work[k * d + c]
        a = v[c]
        for j in range(d):
            if _step(piv, a, v[j], work[k * d + j], prev, &v[j]) < 0:
                return -1
        prev = piv
    for j in range(d):
        if v[j] != 0:
            return 0
    return 1


cdef long *_index_array(idx, Py_ssize_t *m) except NULL:
    cdef list items = list(idx)
    cdef Py_ssize_t i
    m[0] = len(items)
    cdef long *out = <long *>malloc((m[0] + 1) * sizeof(long))
    if out == NULL:
        raise MemoryError()
    for i in range(m[0]):
        out[i] = items[i]
    return out


def rank_rows(const int64_t[:, ::1] mat, idx):
    cdef Py_ssize_t m
    cdef long *ix = _index_array(idx, &m)
    cdef Py_ssize_t d = mat.shape[1]
    cdef int rank = 0
    cdef int64_t *work = <int64_t *>malloc((m * d + 1) * sizeof(int64_t))
    cdef int *pcols = <int *>malloc((d + 1) * sizeof(int))
    try:
        if m:
            with nogil:
                rank = _echelon(mat, ix, m, work, pcols)
    finally:
        free(ix)
        free(work)
        free(pcols)
    if rank < 0:
        raise OverflowError("int64 overflow in fraction-free elimination")
    return rank


def closure_rows(const int64_t[:, ::1] mat, idx):
    cdef Py_ssize_t m
    cdef long *ix = _index_array(idx, &m)
    cdef Py_ssize_t n = mat.shape[0]
    cdef Py_ssize_t d = mat.shape[1]
    cdef Py_ssize_t i
    cdef int rank = 0, res, bad = 0
    cdef int64_t *work = <int64_t *>malloc((m * d + 1) * sizeof(int64_t))
    cdef int *pcols = <int *>malloc((d + 1) * sizeof(int))
    cdef int64_t *v = <int64_t *>malloc((d + 1) * sizeof(int64_t))
    cdef char *flags = <char *>malloc((n + 1) * sizeof(char))
    try:
        with nogil:
            rank = _echelon(mat, ix, m, work, pcols)
            if rank >= 0:
                for i in range(n):
                    flags[i] = 0
                for i in range(m):
                    flags[ix[i]] = 1
                for i in range(n):
                    if flags[i]:
                        continue
                    res = _in_span(mat, i, work, pcols, rank, v)
                    if res < 0:
                        bad = 1
                        break
                    flags[i] = <char>res
        if rank < 0 or bad:
            raise OverflowError("int64 overflow in fraction-free elimination")
        return rank, [i for i in range(n) if flags[i]]
    finally:
        free(ix)
        free(work)
        free(pcols)
        free(v)
        free(flags)
