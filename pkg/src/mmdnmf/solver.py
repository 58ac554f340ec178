"""Alternating optimization for baseline NMF and its max-min-distance
supervised variant.

Both fits alternate the multiplicative updates

    U <- U * (X V^T) / (U V V^T + guard)
    V <- V * (U^T X + V Lam + V E) / (U^T U V + V D + V Xi + guard)

where Lam, Xi, D, E are zero for the baseline. The supervised loop adds,
per outer iteration: pairwise coefficient distances over the within/
between pair sets, the closed-form multiplier subproblem, and a slack
update. The tracked objective is

    ||X - UV||_F^2 + a * epsilon - b * zeta

which is not guaranteed monotone; the baseline reconstruction error is.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (ConfigurationError, DegenerateMultiplierError, DimensionError,
                     InfeasibleError, InputError)
from .lp import MultiplierState, solve_multiplier_lp
from .matrix import as_data_matrix, check_rank, frobenius_sq, pair_distances, ratio_update
from .pairing import assemble_weights, build_pair_sets

DEFAULT_GUARD = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    rank: int
    a: float = 1.0
    b: float = 1.0
    max_iter: int = 500
    tol: float = 1e-6
    seed: int = 0
    slack_mode: str = "direct"   # "direct" or "paper"
    guard: float = DEFAULT_GUARD

    def __post_init__(self):
        if self.rank < 1:
            raise ConfigurationError(f"rank must be >= 1, got {self.rank}")
        if self.max_iter < 1:
            raise ConfigurationError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.tol <= 0:
            raise ConfigurationError(f"tol must be > 0, got {self.tol}")
        if self.a <= 0 or self.b <= 0:
            raise ConfigurationError(f"a and b must be > 0, got a={self.a}, b={self.b}")
        if self.guard <= 0:
            raise ConfigurationError(f"guard must be > 0, got {self.guard}")
        if self.slack_mode not in ("paper", "direct"):
            raise ConfigurationError(f"slack_mode must be 'paper' or 'direct', got {self.slack_mode!r}")


@dataclass
class IterationRecord:
    reconstruction_error: float
    epsilon: float
    zeta: float
    objective: float
    max_within_dist: float
    min_between_dist: float


@dataclass
class FitReport:
    iterations: list = field(default_factory=list)
    converged: bool = False
    basis: np.ndarray = None       # U, d x m
    coeffs: np.ndarray = None      # V, m x n

    @property
    def final(self):
        return self.iterations[-1]


def init_factorization(X, rank, seed):
    """Uniform-positive random (U, V), reproducible from the seed."""
    X = as_data_matrix(X, "X")
    d, n = X.shape
    check_rank(d, n, rank)
    rng = np.random.default_rng(seed)
    U = rng.uniform(0.01, 1.01, size=(d, rank))
    V = rng.uniform(0.01, 1.01, size=(rank, n))
    return U, V


def update_U(X, U, V, guard=DEFAULT_GUARD):
    return ratio_update(U, X @ V.T, U @ (V @ V.T), guard)


def update_V(X, U, V, weights=None, guard=DEFAULT_GUARD):
    numer = U.T @ X
    denom = (U.T @ U) @ V
    if weights is not None:
        numer = numer + V @ weights.lambda_mat + V @ weights.e_diag
        denom = denom + V @ weights.d_diag + V @ weights.xi_mat
    return ratio_update(V, numer, denom, guard)


def objective(X, U, V, epsilon, zeta, a, b):
    """Slack-form objective ||X - UV||^2 + a*eps - b*zeta."""
    return frobenius_sq(X, U @ V) + a * epsilon - b * zeta


def update_slacks(state, a, b, mode, within_dists, between_dists):
    """Return a new MultiplierState with epsilon and zeta updated.

    'paper' mode rescales the slacks by the multiplier sums
    (eps <- (sum lam / a) eps, zeta <- (b / sum xi) zeta); 'direct' mode
    recomputes them as the actual max within / min between distance.
    """
    if mode == "paper":
        xi_sum = float(np.sum(state.xi))
        if xi_sum == 0:
            raise DegenerateMultiplierError("sum(xi) = 0: zeta update undefined in paper mode")
        lam_sum = float(np.sum(state.lam))
        eps = (lam_sum / a) * state.epsilon
        zeta = (b / xi_sum) * state.zeta
    elif mode == "direct":
        if len(between_dists) == 0:
            raise InputError("direct slack mode requires between-class distances")
        eps = float(np.max(within_dists)) if len(within_dists) else 0.0
        zeta = float(np.min(between_dists))
    else:
        raise ConfigurationError(f"unknown slack mode {mode!r}")
    return replace(state, epsilon=eps, zeta=zeta)


def _normalize_columns(U, V):
    """Scale U's columns to unit norm, compensating in V's rows."""
    norms = np.linalg.norm(U, axis=0)
    scale = np.where(norms > 0, norms, 1.0)
    return U / scale, V * scale[:, None]


def kkt_residual(X, U, V):
    """Max-abs entry of the baseline stationarity residual (UVV^T - XV^T) * U."""
    return float(np.max(np.abs((U @ (V @ V.T) - X @ V.T) * U)))


def fit_baseline(X, config):
    """Unsupervised NMF by alternating multiplicative updates.

    Stops when the relative reconstruction-error change drops below
    config.tol or after config.max_iter iterations.
    """
    X = as_data_matrix(X, "X")
    U, V = init_factorization(X, config.rank, config.seed)
    report = FitReport()
    prev_err = None
    for _ in range(config.max_iter):
        U = update_U(X, U, V, config.guard)
        V = update_V(X, U, V, None, config.guard)
        err = frobenius_sq(X, U @ V)
        report.iterations.append(IterationRecord(
            reconstruction_error=err, epsilon=0.0, zeta=0.0, objective=err,
            max_within_dist=float("nan"), min_between_dist=float("nan")))
        if prev_err is not None and abs(prev_err - err) <= config.tol * max(prev_err, 1e-30):
            report.converged = True
            break
        prev_err = err
    report.basis, report.coeffs = _normalize_columns(U, V)
    return report


def fit_mmdnmf(X, labels, config):
    """Supervised max-min-distance NMF.

    Per outer iteration: pairwise coefficient distances over the within
    and between pair sets, closed-form multiplier subproblem, weight
    assembly, the two multiplicative updates, then the slack update.
    """
    X = as_data_matrix(X, "X")
    if len(labels) != X.shape[1]:
        raise InputError(f"{len(labels)} labels for {X.shape[1]} samples")
    pairs = build_pair_sets(labels)
    if not pairs.between:
        raise InfeasibleError("labels contain a single class: no between-class pairs")

    U, V = init_factorization(X, config.rank, config.seed)
    n_w, n_b = len(pairs.within), len(pairs.between)

    wd = pair_distances(V, pairs.within)
    bd = pair_distances(V, pairs.between)
    state = MultiplierState(
        lam=np.full(n_w, config.a / n_w) if n_w else np.empty(0),
        xi=np.full(n_b, config.b / n_b),
        epsilon=float(np.max(wd)) if n_w else 0.0,
        zeta=float(np.min(bd)),
    )

    report = FitReport()
    prev_obj = None
    for _ in range(config.max_iter):
        wd = pair_distances(V, pairs.within)
        bd = pair_distances(V, pairs.between)
        lam, xi = solve_multiplier_lp(wd, bd, state.epsilon, state.zeta,
                                      config.a, config.b)
        state = replace(state, lam=lam, xi=xi)
        weights = assemble_weights(pairs, state.lam, state.xi)
        U = update_U(X, U, V, config.guard)
        V = update_V(X, U, V, weights, config.guard)
        state = update_slacks(state, config.a, config.b, config.slack_mode, wd, bd)

        err = frobenius_sq(X, U @ V)
        obj = err + config.a * state.epsilon - config.b * state.zeta
        report.iterations.append(IterationRecord(
            reconstruction_error=err, epsilon=state.epsilon, zeta=state.zeta,
            objective=obj,
            max_within_dist=float(np.max(wd)) if n_w else 0.0,
            min_between_dist=float(np.min(bd))))
        if prev_obj is not None and abs(prev_obj - obj) <= config.tol * max(abs(prev_obj), 1e-30):
            report.converged = True
            break
        prev_obj = obj
    report.basis, report.coeffs = _normalize_columns(U, V)
    return report


def project(U, x_new, iters=200, guard=DEFAULT_GUARD, seed=0):
    """Encode an unseen nonnegative column against a fixed basis.

    Runs the V-update with U frozen from a positive uniform start.
    """
    cols = project_columns(U, np.asarray(x_new, dtype=np.float64).reshape(-1, 1),
                           iters=iters, guard=guard, seed=seed)
    return cols[:, 0]


def project_columns(U, X_new, iters=200, guard=DEFAULT_GUARD, seed=0):
    """Vectorized `project` over the columns of X_new."""
    U = np.asarray(U, dtype=np.float64)
    X_new = np.asarray(X_new, dtype=np.float64)
    if X_new.shape[0] != U.shape[0]:
        raise DimensionError(f"x_new has {X_new.shape[0]} features, basis expects {U.shape[0]}")
    if (X_new < 0).any():
        raise InputError("x_new must be nonnegative")
    if guard <= 0:
        raise ConfigurationError(f"guard must be > 0, got {guard}")
    rng = np.random.default_rng(seed)
    V = rng.uniform(0.01, 1.01, size=(U.shape[1], X_new.shape[1]))
    UtX = U.T @ X_new
    UtU = U.T @ U
    for _ in range(iters):
        V = V * UtX / (UtU @ V + guard)
    return V
