# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the per-iteration hot loops: pairwise squared
distances over explicit pair lists and dense column-to-column distance
matrices."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

COMPILED = True


def pair_sq_distances(double[:, ::1] V, long[::1] idx_i, long[::1] idx_j):
    """Squared L2 distances between column pairs (idx_i[p], idx_j[p]) of V."""
    cdef Py_ssize_t m = V.shape[0]
    cdef Py_ssize_t npairs = idx_i.shape[0]
    cdef cnp.ndarray[double, ndim=1] out = np.empty(npairs, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t p, k, i, j
    cdef double acc, diff
    for p in range(npairs):
        i = idx_i[p]
        j = idx_j[p]
        acc = 0.0
        for k in range(m):
            diff = V[k, i] - V[k, j]
            acc += diff * diff
        ov[p] = acc
    return out


def sq_distance_matrix(double[:, ::1] A, double[:, ::1] B):
    """All squared L2 distances between columns of A and columns of B."""
    cdef Py_ssize_t m = A.shape[0]
    cdef Py_ssize_t na = A.shape[1]
    cdef Py_ssize_t nb = B.shape[1]
    cdef cnp.ndarray[double, ndim=2] out = np.empty((na, nb), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t i, j, k
    cdef double acc, diff
    for i in range(na):
        for j in range(nb):
            acc = 0.0
            for k in range(m):
                diff = A[k, i] - B[k, j]
                acc += diff * diff
            ov[i, j] = acc
    return out
