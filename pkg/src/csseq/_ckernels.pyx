# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled correlation and distance kernels.

Same contract as csseq._pykernels: int64 phase-index arrays with -1 as
the NULL marker, histogram tables indexed by t = u + L - 1.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def corr_hist(const i64[::1] a, const i64[::1] b, Py_ssize_t u, int q):
    cdef Py_ssize_t L = a.shape[0]
    out = np.zeros(q, dtype=np.int64)
    cdef i64[::1] h = out
    cdef Py_ssize_t j, lo, hi
    cdef i64 ka, kb
    cdef long long d
    lo = 0 if u >= 0 else -u
    hi = L - u if u > 0 else L
    for j in range(lo, hi):
        ka = a[j]
        kb = b[j + u]
        if ka >= 0 and kb >= 0:
            # entries are in [0, q), so the difference is in (-q, q)
            d = ka - kb
            if d < 0:
                d += q
            h[d] += 1
    return out


def corr_table(const i64[::1] a, const i64[::1] b, int q):
    cdef Py_ssize_t L = a.shape[0]
    out = np.zeros((2 * L - 1, q), dtype=np.int64)
    cdef i64[:, ::1] T = out
    _accumulate_table(T, a, b, q, L)
    return out


def corr_table_sum(const i64[:, ::1] A, const i64[:, ::1] B, int q):
    cdef Py_ssize_t N = A.shape[0]
    cdef Py_ssize_t L = A.shape[1]
    out = np.zeros((2 * L - 1, q), dtype=np.int64)
    cdef i64[:, ::1] T = out
    cdef Py_ssize_t r
    for r in range(N):
        _accumulate_table(T, A[r], B[r], q, L)
    return out


cdef void _accumulate_table(i64[:, ::1] T, const i64[:] a, const i64[:] b,
                            int q, Py_ssize_t L) noexcept nogil:
    cdef Py_ssize_t u, j, lo, hi
    cdef i64 ka, kb
    cdef long long d
    for u in range(-(L - 1), L):
        lo = 0 if u >= 0 else -u
        hi = L - u if u > 0 else L
        for j in range(lo, hi):
            ka = a[j]
            kb = b[j + u]
            if ka >= 0 and kb >= 0:
                d = ka - kb
                if d < 0:
                    d += q
                T[u + L - 1, d] += 1


def min_hamming(const i64[:, ::1] codes):
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t L = codes.shape[1]
    cdef Py_ssize_t i, j, p, bi, bj
    cdef long long best = L + 1
    cdef long long d
    bi = bj = -1
    with nogil:
        for i in range(n - 1):
            for j in range(i + 1, n):
                d = 0
                for p in range(L):
                    d += codes[i, p] != codes[j, p]
                if d < best:
                    best = d
                    bi = i
                    bj = j
            if best == 0:
                break
    return int(best), int(bi), int(bj)
