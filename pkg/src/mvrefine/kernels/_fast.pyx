# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: brute-force nearest neighbors and CSR neighbor sums.

Semantics (summation order, tie breaking) match _numpy_impl exactly so the
two backends are interchangeable bit for bit.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


def nearest_neighbors(a, b):
    """For each row of `a`, squared distance and index of its nearest row in `b`."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] aa = np.ascontiguousarray(a, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] bb = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t n = aa.shape[0]
    cdef Py_ssize_t m = bb.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] d2 = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] idx = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t i, j, best_j
    cdef double ax, ay, az, dx, dy, dz, d, best
    for i in range(n):
        ax = aa[i, 0]
        ay = aa[i, 1]
        az = aa[i, 2]
        best = np.inf
        best_j = 0
        for j in range(m):
            dx = ax - bb[j, 0]
            dy = ay - bb[j, 1]
            dz = az - bb[j, 2]
            d = dx * dx + dy * dy + dz * dz
            if d < best:
                best = d
                best_j = j
        d2[i] = best
        idx[i] = best_j
    return d2, idx


def csr_neighbor_sum(x, indptr, indices):
    """Sum of neighbor rows: out[i] = sum(x[j] for j in indices[indptr[i]:indptr[i+1]])."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] xx = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ptr = np.asarray(indptr, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] col = np.asarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef Py_ssize_t d = xx.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((n, d), dtype=np.float64)
    cdef Py_ssize_t i, k, c, j
    for i in range(n):
        for k in range(ptr[i], ptr[i + 1]):
            j = col[k]
            for c in range(d):
                out[i, c] += xx[j, c]
    return out
