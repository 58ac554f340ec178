"""Max-min distance nonnegative matrix factorization.

Supervised NMF that, alongside the reconstruction objective, minimizes
the maximum within-class pairwise distance and maximizes the minimum
between-class pairwise distance of the coefficient vectors.
"""

__version__ = "0.1.0"

from .backend import KERNEL_BACKEND
from .data import Dataset, generate_synthetic, load_dataset, save_dataset, stratified_split
from .evaluation import EvalResult, knn_accuracy, margin_stats
from .lp import MultiplierState, brute_force_lp_oracle, solve_multiplier_lp
from .matrix import frobenius_sq, pair_distances, pairwise_sq_distance, ratio_update
from .pairing import PairSets, WeightMatrices, assemble_weights, build_pair_sets
from .solver import (FitReport, SolverConfig, fit_baseline, fit_mmdnmf,
                     init_factorization, objective, project, project_columns,
                     update_slacks, update_U, update_V)

__all__ = [
    "__version__", "KERNEL_BACKEND",
    "Dataset", "generate_synthetic", "load_dataset", "save_dataset", "stratified_split",
    "EvalResult", "knn_accuracy", "margin_stats",
    "MultiplierState", "brute_force_lp_oracle", "solve_multiplier_lp",
    "frobenius_sq", "pair_distances", "pairwise_sq_distance", "ratio_update",
    "PairSets", "WeightMatrices", "assemble_weights", "build_pair_sets",
    "FitReport", "SolverConfig", "fit_baseline", "fit_mmdnmf",
    "init_factorization", "objective", "project", "project_columns",
    "update_slacks", "update_U", "update_V",
]
