"""Closed-form solution of the per-iteration multiplier subproblem.

Each iteration maximizes

    sum_p lam_p (d_p - eps) - sum_q xi_q (d_q - zeta)

over lam >= 0 with sum(lam) <= a and xi >= 0 with sum(xi) >= b. The
feasible region's relevant vertices put all mass on a single pair, so the
optimum is closed form: mass a on the argmax within-pair when its
coefficient is positive (else lam = 0), and mass b on the argmin
between-pair. When some (d_q - zeta) is negative the problem is unbounded
above; the sum(xi) = b boundary is used instead, which coincides with the
LP optimum whenever all coefficients are nonnegative. Ties break toward
the lowest pair index.

``brute_force_lp_oracle`` enumerates the same vertex set exhaustively and
is kept as an independent check at test scale.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, InfeasibleError, ScaleError

ORACLE_MAX_PAIRS = 12


@dataclass
class MultiplierState:
    """Per-pair multipliers plus the two slack scalars."""

    lam: np.ndarray      # aligned with PairSets.within
    xi: np.ndarray       # aligned with PairSets.between
    epsilon: float = 0.0
    zeta: float = 0.0


def _check_tradeoffs(a, b):
    if a <= 0 or b <= 0:
        raise ConfigurationError(f"trade-off parameters must be positive, got a={a}, b={b}")


def solve_multiplier_lp(within_dists, between_dists, epsilon, zeta, a, b):
    """Closed-form multiplier update; returns (lam, xi) arrays."""
    _check_tradeoffs(a, b)
    wd = np.asarray(within_dists, dtype=np.float64)
    bd = np.asarray(between_dists, dtype=np.float64)
    if bd.size == 0:
        raise InfeasibleError("no between-class pairs: sum(xi) >= b is infeasible")

    lam = np.zeros(wd.size)
    if wd.size > 0:
        coeff = wd - epsilon
        p = int(np.argmax(coeff))
        if coeff[p] > 0:
            lam[p] = a

    xi = np.zeros(bd.size)
    q = int(np.argmin(bd - zeta))
    xi[q] = b
    return lam, xi


def lp_objective(lam, xi, within_dists, between_dists, epsilon, zeta):
    lam = np.asarray(lam, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    obj = 0.0
    if lam.size:
        obj += float(lam @ (np.asarray(within_dists) - epsilon))
    if xi.size:
        obj -= float(xi @ (np.asarray(between_dists) - zeta))
    return obj


def brute_force_lp_oracle(within_dists, between_dists, epsilon, zeta, a, b):
    """Enumerate single-pair vertices and return the objective maximizer."""
    _check_tradeoffs(a, b)
    wd = np.asarray(within_dists, dtype=np.float64)
    bd = np.asarray(between_dists, dtype=np.float64)
    if wd.size > ORACLE_MAX_PAIRS or bd.size > ORACLE_MAX_PAIRS:
        raise ScaleError(f"oracle limited to {ORACLE_MAX_PAIRS} pairs per set")
    if bd.size == 0:
        raise InfeasibleError("no between-class pairs: sum(xi) >= b is infeasible")

    lam_candidates = [np.zeros(wd.size)]
    for p in range(wd.size):
        v = np.zeros(wd.size)
        v[p] = a
        lam_candidates.append(v)
    xi_candidates = []
    for q in range(bd.size):
        v = np.zeros(bd.size)
        v[q] = b
        xi_candidates.append(v)

    best = None
    best_obj = -np.inf
    for lam in lam_candidates:
        for xi in xi_candidates:
            obj = lp_objective(lam, xi, wd, bd, epsilon, zeta)
            if obj > best_obj:
                best_obj = obj
                best = (lam, xi)
    return best
