"""Pure-numpy fallback for the compiled distance kernels.

Same contract as the Cython module ``_kernels_cy``: distances are plain
sums of squared coordinate differences in float64.
"""

import numpy as np

COMPILED = False


def pair_sq_distances(V, idx_i, idx_j):
    """Squared L2 distances between column pairs (idx_i[p], idx_j[p]) of V."""
    diff = V[:, idx_i] - V[:, idx_j]
    # add.reduce keeps the sequential per-coordinate summation order of the
    # compiled kernel (pairwise summation only starts above 128 terms)
    return np.add.reduce(diff * diff, axis=0)


def sq_distance_matrix(A, B):
    """All squared L2 distances between columns of A and columns of B."""
    aa = np.einsum("ki,ki->i", A, A)
    bb = np.einsum("kj,kj->j", B, B)
    d = aa[:, None] + bb[None, :] - 2.0 * (A.T @ B)
    np.maximum(d, 0.0, out=d)
    return d
