"""Representation quality metrics: class-margin statistics in coefficient
space and k-nearest-neighbor classification accuracy."""

from dataclasses import dataclass

import numpy as np

from .backend import sq_distance_matrix
from .errors import ConfigurationError, EvaluationError
from .matrix import pair_distances


@dataclass
class EvalResult:
    knn_accuracy: float
    max_within_dist: float
    min_between_dist: float
    reconstruction_error: float


def margin_stats(V, pairs):
    """(max within-pair, min between-pair) squared column distance of V.

    An empty within set yields 0 for the max; an empty between set is an
    error because the minimum is undefined.
    """
    if not pairs.between:
        raise EvaluationError("between-pair set is empty: min between-class distance undefined")
    wd = pair_distances(V, pairs.within)
    bd = pair_distances(V, pairs.between)
    max_within = float(np.max(wd)) if wd.size else 0.0
    return max_within, float(np.min(bd))


def knn_accuracy(V_train, y_train, V_test, y_test, k=1):
    """Fraction of test columns classified correctly by k-NN in V-space.

    Squared Euclidean distance; neighbor ties break toward the lowest
    training index, majority ties toward the smallest class identifier.
    """
    V_train = np.ascontiguousarray(V_train, dtype=np.float64)
    V_test = np.ascontiguousarray(V_test, dtype=np.float64)
    n_train = V_train.shape[1]
    if not (1 <= k <= n_train):
        raise ConfigurationError(f"k must be in [1, {n_train}], got {k}")
    if len(y_train) != n_train or len(y_test) != V_test.shape[1]:
        raise ConfigurationError("labels misaligned with coefficient columns")

    y_train = list(y_train)
    dists = np.asarray(sq_distance_matrix(V_test, V_train))
    correct = 0
    for t in range(V_test.shape[1]):
        order = np.argsort(dists[t], kind="stable")[:k]
        votes = {}
        for idx in order:
            lbl = y_train[idx]
            votes[lbl] = votes.get(lbl, 0) + 1
        top = max(votes.values())
        predicted = min(lbl for lbl, c in votes.items() if c == top)
        if predicted == y_test[t]:
            correct += 1
    return correct / V_test.shape[1]
