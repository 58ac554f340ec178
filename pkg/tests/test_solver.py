import numpy as np
import pytest

from mmdnmf.errors import (ConfigurationError, DegenerateMultiplierError,
                           DimensionError, InfeasibleError, InputError)
from mmdnmf.lp import MultiplierState
from mmdnmf.matrix import frobenius_sq
from mmdnmf.pairing import assemble_weights, build_pair_sets
from mmdnmf.solver import (SolverConfig, fit_baseline, fit_mmdnmf, init_factorization,
                           kkt_residual, objective, project, project_columns,
                           update_slacks, update_U, update_V)


def rand_X(d, n, seed=0):
    return np.random.default_rng(seed).uniform(0.1, 1.0, size=(d, n))


# --- init ---

def test_init_deterministic():
    X = rand_X(5, 8)
    U1, V1 = init_factorization(X, 3, seed=7)
    U2, V2 = init_factorization(X, 3, seed=7)
    assert (U1 == U2).all() and (V1 == V2).all()


def test_init_strictly_positive():
    U, V = init_factorization(rand_X(5, 8), 3, seed=0)
    assert (U > 0).all() and (V > 0).all()


def test_init_seed_sensitivity():
    X = rand_X(5, 8)
    U1, _ = init_factorization(X, 3, seed=0)
    U2, _ = init_factorization(X, 3, seed=1)
    assert (U1 != U2).any()


def test_init_invalid_rank():
    with pytest.raises(ConfigurationError):
        init_factorization(rand_X(5, 8), 6, seed=0)


# --- multiplicative updates ---

def test_update_U_fixed_point_on_exact_factorization():
    U = np.array([[1.0], [1.0]])
    V = np.array([[1.0, 1.0]])
    X = U @ V
    np.testing.assert_allclose(update_U(X, U, V), U, rtol=1e-10)


def test_update_U_scalar():
    out = update_U(np.array([[2.0]]), np.array([[1.0]]), np.array([[1.0]]))
    np.testing.assert_allclose(out, [[2.0]], rtol=1e-9)


def test_update_U_zero_locking():
    U = np.array([[0.0, 1.0], [1.0, 1.0]])
    V = np.abs(np.random.default_rng(0).normal(size=(2, 3))) + 0.1
    X = rand_X(2, 3)
    assert update_U(X, U, V)[0, 0] == 0.0


def test_update_V_baseline_fixed_point():
    rng = np.random.default_rng(4)
    U = rng.uniform(0.1, 1, (4, 2))
    V = rng.uniform(0.1, 1, (2, 6))
    X = U @ V
    np.testing.assert_allclose(update_V(X, U, V), V, rtol=1e-10)


def test_update_V_scalar():
    out = update_V(np.array([[2.0]]), np.array([[1.0]]), np.array([[1.0]]))
    np.testing.assert_allclose(out, [[2.0]], rtol=1e-9)


def test_update_V_equal_columns_cancel_within_terms():
    # with v1 = v2 and a single within-pair, V Lam = V D, so the
    # supervised terms cancel and the exact-factorization fixed point holds
    rng = np.random.default_rng(5)
    U = rng.uniform(0.1, 1, (3, 2))
    v = rng.uniform(0.1, 1, (2, 1))
    V = np.hstack([v, v])
    X = U @ V
    pairs = build_pair_sets(["A", "A"])
    weights = assemble_weights(pairs, [1.0], [])
    np.testing.assert_allclose(update_V(X, U, V, weights), V, rtol=1e-9)


# --- slack updates and objective ---

def test_update_slacks_paper_mode():
    st = MultiplierState(lam=np.array([1.0]), xi=np.array([2.0]), epsilon=4.0, zeta=3.0)
    out = update_slacks(st, a=1.0, b=2.0, mode="paper", within_dists=[], between_dists=[])
    assert out.epsilon == 4.0 and out.zeta == 3.0

    st = MultiplierState(lam=np.array([0.5]), xi=np.array([2.0]), epsilon=4.0, zeta=3.0)
    out = update_slacks(st, a=1.0, b=2.0, mode="paper", within_dists=[], between_dists=[])
    assert out.epsilon == 2.0


def test_update_slacks_paper_mode_degenerate():
    st = MultiplierState(lam=np.array([1.0]), xi=np.array([0.0]), epsilon=1.0, zeta=1.0)
    with pytest.raises(DegenerateMultiplierError):
        update_slacks(st, 1.0, 1.0, "paper", [], [])


def test_update_slacks_direct_mode():
    st = MultiplierState(lam=np.empty(0), xi=np.array([1.0]), epsilon=0.0, zeta=0.0)
    out = update_slacks(st, 1.0, 1.0, "direct", [1.0, 3.0], [2.0, 5.0])
    assert out.epsilon == 3.0 and out.zeta == 2.0


def test_objective_values():
    U = np.array([[1.0], [1.0]])
    V = np.array([[1.0, 1.0]])
    X = U @ V
    assert objective(X, U, V, 0.0, 0.0, 1.0, 1.0) == 0.0
    assert objective(X, U, V, 2.0, 3.0, 1.0, 1.0) == -1.0
    assert objective(X, U, V, 0.0, 100.0, 1.0, 1.0) < 0


def test_objective_direct_substitution():
    # ||X-UV||^2 = 5, a=1, eps=2, b=1, zeta=3 -> 4
    X = np.array([[3.0, 0.0]])
    U = np.array([[1.0]])
    V = np.array([[1.0, 1.0]])  # residuals 2 and -1 -> 5
    assert objective(X, U, V, 2.0, 3.0, 1.0, 1.0) == 4.0


# --- baseline fit ---

def test_fit_baseline_converges_at_full_rank():
    X = rand_X(5, 8, seed=1)
    rep = fit_baseline(X, SolverConfig(rank=5, max_iter=2000, tol=1e-14))
    assert rep.iterations[-1].reconstruction_error < 1e-3 * rep.iterations[0].reconstruction_error


def test_fit_baseline_exact_rank_one():
    rng = np.random.default_rng(2)
    X = rng.uniform(0.1, 1, (6, 1)) @ rng.uniform(0.1, 1, (1, 9))
    rep = fit_baseline(X, SolverConfig(rank=1, max_iter=2000, tol=1e-16))
    assert rep.final.reconstruction_error < 1e-6 * frobenius_sq(X, np.zeros_like(X))


def test_fit_baseline_single_iteration():
    rep = fit_baseline(rand_X(4, 6), SolverConfig(rank=2, max_iter=1))
    assert len(rep.iterations) == 1


def test_fit_baseline_monotone():
    rep = fit_baseline(rand_X(6, 10, seed=3), SolverConfig(rank=3, max_iter=400, tol=1e-15))
    errs = [r.reconstruction_error for r in rep.iterations]
    for prev, cur in zip(errs, errs[1:]):
        assert cur <= prev + 1e-9


def test_fit_baseline_nonnegative_and_deterministic():
    X = rand_X(6, 10, seed=4)
    cfg = SolverConfig(rank=3, max_iter=50)
    r1 = fit_baseline(X, cfg)
    r2 = fit_baseline(X, cfg)
    assert (r1.basis >= 0).all() and (r1.coeffs >= 0).all()
    assert (r1.basis == r2.basis).all() and (r1.coeffs == r2.coeffs).all()
    assert [a.reconstruction_error for a in r1.iterations] == \
           [a.reconstruction_error for a in r2.iterations]


def test_kkt_residual_small_at_convergence():
    rng = np.random.default_rng(0)
    X = rng.uniform(0.1, 1, (8, 2)) @ rng.uniform(0.1, 1, (2, 20))
    rep = fit_baseline(X, SolverConfig(rank=2, max_iter=3000, tol=1e-16))
    assert kkt_residual(X, rep.basis, rep.coeffs) < 1e-8 * frobenius_sq(X, np.zeros_like(X))


# --- supervised fit ---

def two_cluster_data(d=10, per=20, seed=0, sep=6.0):
    rng = np.random.default_rng(seed)
    c1 = sep * rng.uniform(0.5, 1.0, d)
    c2 = sep * rng.uniform(0.0, 0.5, d)
    X = np.hstack([np.clip(c[:, None] + rng.normal(0, 1, (d, per)), 0, None)
                   for c in (c1, c2)])
    labels = ["A"] * per + ["B"] * per
    return X, labels


def test_fit_mmdnmf_improves_margins():
    X, labels = two_cluster_data()
    rep = fit_mmdnmf(X, labels, SolverConfig(rank=2, max_iter=200, tol=1e-12))
    assert rep.final.max_within_dist < rep.iterations[0].max_within_dist
    assert rep.final.min_between_dist > 0


def test_fit_mmdnmf_limiting_case_matches_baseline():
    X, labels = two_cluster_data(seed=2)
    iters = 150
    base = fit_baseline(X, SolverConfig(rank=2, max_iter=iters, tol=1e-16, seed=5))
    mmd = fit_mmdnmf(X, labels, SolverConfig(rank=2, a=1e-8, b=1e-8,
                                             max_iter=iters, tol=1e-16, seed=5))
    assert len(base.iterations) == len(mmd.iterations)
    rb = base.final.reconstruction_error
    rm = mmd.final.reconstruction_error
    assert abs(rb - rm) <= 1e-4 * rb


def test_fit_mmdnmf_all_distinct_labels():
    X = rand_X(5, 6, seed=6)
    rep = fit_mmdnmf(X, list(range(6)), SolverConfig(rank=2, max_iter=20))
    assert all(rec.epsilon == 0.0 for rec in rep.iterations)
    assert all(rec.max_within_dist == 0.0 for rec in rep.iterations)


def test_fit_mmdnmf_single_class_infeasible():
    with pytest.raises(InfeasibleError):
        fit_mmdnmf(rand_X(4, 5), ["A"] * 5, SolverConfig(rank=2))


def test_fit_mmdnmf_label_length_mismatch():
    with pytest.raises(InputError):
        fit_mmdnmf(rand_X(4, 5), ["A", "B"], SolverConfig(rank=2))


def test_fit_mmdnmf_nonnegative_every_iteration():
    X, labels = two_cluster_data(seed=7, per=8)
    rep = fit_mmdnmf(X, labels, SolverConfig(rank=3, max_iter=60, tol=1e-15))
    assert (rep.basis >= 0).all() and (rep.coeffs >= 0).all()
    assert all(rec.reconstruction_error >= 0 for rec in rep.iterations)
    assert all(rec.epsilon >= 0 and rec.zeta >= 0 for rec in rep.iterations)


def test_fit_mmdnmf_deterministic():
    X, labels = two_cluster_data(seed=8, per=6)
    cfg = SolverConfig(rank=2, max_iter=40)
    r1 = fit_mmdnmf(X, labels, cfg)
    r2 = fit_mmdnmf(X, labels, cfg)
    assert (r1.basis == r2.basis).all() and (r1.coeffs == r2.coeffs).all()
    assert [a.objective for a in r1.iterations] == [a.objective for a in r2.iterations]


def test_fit_mmdnmf_paper_slack_mode_runs():
    X, labels = two_cluster_data(seed=9, per=6)
    rep = fit_mmdnmf(X, labels, SolverConfig(rank=2, max_iter=40, slack_mode="paper"))
    assert len(rep.iterations) >= 1
    assert all(rec.zeta >= 0 for rec in rep.iterations)


# --- projection ---

def test_project_recovers_training_column():
    rng = np.random.default_rng(1)
    U = rng.uniform(0.1, 1, (6, 3))
    v = rng.uniform(0.1, 1, 3)
    x = U @ v
    v_hat = project(U, x, iters=200)
    assert frobenius_sq(x.reshape(-1, 1), (U @ v_hat).reshape(-1, 1)) < 1e-6


def test_project_zero_input():
    U = np.random.default_rng(2).uniform(0.1, 1, (5, 2))
    v = project(U, np.zeros(5), iters=50)
    assert (np.abs(U @ v) < 1e-6).all()


def test_project_identity_basis():
    x = np.array([0.3, 0.7, 1.2])
    v = project(np.eye(3), x, iters=200)
    np.testing.assert_allclose(v, x, atol=1e-6)


def test_project_dimension_mismatch():
    with pytest.raises(DimensionError):
        project(np.ones((4, 2)), np.ones(3))


def test_project_columns_shape_and_nonnegativity():
    rng = np.random.default_rng(3)
    U = rng.uniform(0.1, 1, (5, 2))
    X_new = rng.uniform(0, 1, (5, 4))
    V = project_columns(U, X_new, iters=100, seed=11)
    assert V.shape == (2, 4)
    assert (V >= 0).all()
