"""Dense nonnegative matrix values and the elementwise kernels shared by
every multiplicative update.

Matrices are plain float64 numpy arrays throughout the package; the
helpers here validate the nonnegativity / shape invariants at the
boundaries instead of wrapping arrays in a class.
"""

import numpy as np

from .backend import pair_sq_distances
from .errors import ConfigurationError, DimensionError


def as_data_matrix(values, name="matrix"):
    """Validate and return a d x n nonnegative float64 matrix.

    Raises DimensionError for a non-2D or empty array and InputError-style
    ValueError (DimensionError subclass not used) for negative entries.
    """
    A = np.asarray(values, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionError(f"{name} must be 2-D with at least one row and column, got shape {A.shape}")
    if not np.isfinite(A).all():
        raise ValueError(f"{name} contains non-finite entries")
    if (A < 0).any():
        raise ValueError(f"{name} contains negative entries")
    return A


def check_rank(d, n, rank):
    """A factorization rank must satisfy 1 <= rank <= min(d, n)."""
    if not (1 <= rank <= min(d, n)):
        raise ConfigurationError(f"rank must be in [1, min(d, n)] = [1, {min(d, n)}], got {rank}")


def frobenius_sq(A, B):
    """Squared Frobenius distance sum_ij (A_ij - B_ij)^2."""
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch: {A.shape} vs {B.shape}")
    diff = A - B
    return float(np.einsum("ij,ij->", diff, diff))


def ratio_update(target, numer, denom, guard):
    """Elementwise multiplicative update target * numer / (denom + guard).

    The additive guard keeps a zero denominator from producing NaN while
    preserving the fixed points of the unguarded rule.
    """
    target = np.asarray(target, dtype=np.float64)
    numer = np.asarray(numer, dtype=np.float64)
    denom = np.asarray(denom, dtype=np.float64)
    if not (target.shape == numer.shape == denom.shape):
        raise DimensionError(
            f"shape mismatch: target {target.shape}, numer {numer.shape}, denom {denom.shape}"
        )
    if guard <= 0:
        raise ConfigurationError(f"guard must be > 0, got {guard}")
    return target * numer / (denom + guard)


def pairwise_sq_distance(V, i, j):
    """Squared L2 distance between columns i and j of V."""
    V = np.asarray(V, dtype=np.float64)
    n = V.shape[1]
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"column indices ({i}, {j}) out of range for n={n}")
    diff = V[:, i] - V[:, j]
    return float(np.add.reduce(diff * diff))


def pair_distances(V, pairs):
    """Squared column distances of V for an explicit list of index pairs.

    Dispatches to the compiled kernel when available; returns a float64
    array aligned with ``pairs``.
    """
    V = np.ascontiguousarray(V, dtype=np.float64)
    if len(pairs) == 0:
        return np.empty(0, dtype=np.float64)
    idx = np.asarray(pairs, dtype=np.int64)
    return np.asarray(pair_sq_distances(V, np.ascontiguousarray(idx[:, 0]),
                                        np.ascontiguousarray(idx[:, 1])))
