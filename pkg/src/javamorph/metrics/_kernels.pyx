# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Levenshtein kernel over integer-coded sequences."""
from libc.stdlib cimport malloc, free


cdef Py_ssize_t _lev(const long long[::1] a, const long long[::1] b) nogil:
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    cdef Py_ssize_t i, j, best, sub
    cdef Py_ssize_t *row
    cdef Py_ssize_t diag, up
    if n == 0:
        return m
    if m == 0:
        return n
    row = <Py_ssize_t *> malloc((m + 1) * sizeof(Py_ssize_t))
    if row == NULL:
        return -1
    for j in range(m + 1):
        row[j] = j
    for i in range(1, n + 1):
        diag = row[0]
        row[0] = i
        for j in range(1, m + 1):
            up = row[j]
            sub = diag + (0 if a[i - 1] == b[j - 1] else 1)
            best = up + 1
            if row[j - 1] + 1 < best:
                best = row[j - 1] + 1
            if sub < best:
                best = sub
            row[j] = best
            diag = up
    best = row[m]
    free(row)
    return best


def levenshtein(const long long[::1] a, const long long[::1] b):
    cdef Py_ssize_t d
    with nogil:
        d = _lev(a, b)
    if d < 0:
        raise MemoryError()
    return d
