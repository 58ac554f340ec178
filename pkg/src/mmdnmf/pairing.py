"""Within/between-class pair sets and the weight matrices used by the
coefficient update.

Labels split all unordered sample pairs (i < j, self-pairs excluded) into
a within-class list W and a between-class list B. Per-pair multipliers
are scattered into symmetric n x n matrices Lam (over W) and Xi (over B)
with row-sum diagonals D and E, so that weighted pairwise distance sums
become graph-Laplacian traces:

    sum_{(i,j) in W} lam_ij ||v_i - v_j||^2 = Tr(V (D - Lam) V^T)
"""

from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class PairSets:
    """Unordered sample pairs split by class label, indices 0-based, i < j."""

    within: list
    between: list
    sample_count: int


@dataclass(frozen=True)
class WeightMatrices:
    lambda_mat: np.ndarray  # n x n symmetric, supported on W
    xi_mat: np.ndarray      # n x n symmetric, supported on B
    d_diag: np.ndarray      # diag of row sums of lambda_mat
    e_diag: np.ndarray      # diag of row sums of xi_mat


def build_pair_sets(labels):
    """Partition all unordered index pairs by label equality."""
    labels = list(labels)
    n = len(labels)
    if n == 0:
        raise InputError("labels must be nonempty")
    within, between = [], []
    for i in range(n):
        for j in range(i + 1, n):
            (within if labels[i] == labels[j] else between).append((i, j))
    return PairSets(within=within, between=between, sample_count=n)


def _scatter_symmetric(pairs, values, n):
    M = np.zeros((n, n))
    for (i, j), v in zip(pairs, values):
        M[i, j] = v
        M[j, i] = v
    return M


def assemble_weights(pairs, lam, xi):
    """Build (Lam, Xi, D, E) from per-pair multiplier vectors.

    lam is aligned with pairs.within, xi with pairs.between.
    """
    lam = np.asarray(lam, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    if lam.shape != (len(pairs.within),):
        raise InputError(f"lambda length {lam.shape} does not match |W|={len(pairs.within)}")
    if xi.shape != (len(pairs.between),):
        raise InputError(f"xi length {xi.shape} does not match |B|={len(pairs.between)}")
    n = pairs.sample_count
    lambda_mat = _scatter_symmetric(pairs.within, lam, n)
    xi_mat = _scatter_symmetric(pairs.between, xi, n)
    d_diag = np.diag(lambda_mat.sum(axis=1))
    e_diag = np.diag(xi_mat.sum(axis=1))
    return WeightMatrices(lambda_mat=lambda_mat, xi_mat=xi_mat,
                          d_diag=d_diag, e_diag=e_diag)
