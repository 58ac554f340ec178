"""Experiment orchestration and machine-readable run reports.

A RunReport captures the configuration, both fit traces, and the
evaluation of baseline NMF vs the supervised variant on a stratified
split. Reports serialize to JSON; floats round-trip exactly through the
shortest-repr decimal form the json module emits.
"""

import json
import math
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .data import stratified_split
from .errors import ConfigurationError
from .evaluation import EvalResult, knn_accuracy, margin_stats
from .pairing import build_pair_sets
from .solver import SolverConfig, fit_baseline, fit_mmdnmf, project_columns

PROJECT_ITERS = 200


@dataclass
class RunReport:
    config: dict
    baseline: dict
    mmdnmf: dict
    evaluation: dict          # method name -> EvalResult fields
    wall_clock_seconds: float
    version: str = __version__

    def to_dict(self):
        return asdict(self)


def _record_dict(rec):
    # undefined margins (baseline fits) serialize as null, not NaN
    return {k: (None if isinstance(v, float) and math.isnan(v) else v)
            for k, v in asdict(rec).items()}


def fit_report_to_dict(report, include_trace=True):
    out = {
        "converged": report.converged,
        "n_iterations": len(report.iterations),
        "final": _record_dict(report.final),
    }
    if include_trace:
        out["trace"] = [_record_dict(rec) for rec in report.iterations]
    return out


def _evaluate(report, V_test, y_train, y_test, pairs_train, k=1):
    max_w, min_b = margin_stats(report.coeffs, pairs_train)
    return EvalResult(
        knn_accuracy=knn_accuracy(report.coeffs, y_train, V_test, y_test, k=k),
        max_within_dist=max_w,
        min_between_dist=min_b,
        reconstruction_error=report.final.reconstruction_error,
    )


def run_experiment(dataset, config, test_fraction, split_seed, include_trace=True):
    """Stratified split, fit both methods on train, evaluate on test."""
    start = time.perf_counter()
    train_idx, test_idx = stratified_split(dataset.labels, test_fraction, split_seed)
    X_train = dataset.matrix[:, train_idx]
    X_test = dataset.matrix[:, test_idx]
    y_train = [dataset.labels[i] for i in train_idx]
    y_test = [dataset.labels[i] for i in test_idx]
    pairs_train = build_pair_sets(y_train)

    base = fit_baseline(X_train, config)
    mmd = fit_mmdnmf(X_train, y_train, config)

    evaluation = {}
    for name, report in (("baseline", base), ("mmdnmf", mmd)):
        V_test = project_columns(report.basis, X_test, iters=PROJECT_ITERS,
                                 guard=config.guard, seed=config.seed)
        evaluation[name] = asdict(_evaluate(report, V_test, y_train, y_test, pairs_train))

    return RunReport(
        config={**asdict(config), "test_fraction": test_fraction, "split_seed": split_seed},
        baseline=fit_report_to_dict(base, include_trace),
        mmdnmf=fit_report_to_dict(mmd, include_trace),
        evaluation=evaluation,
        wall_clock_seconds=time.perf_counter() - start,
    )


def write_report(report, path):
    """Serialize a RunReport (or plain report dict) as JSON."""
    payload = report.to_dict() if isinstance(report, RunReport) else report
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def dumps_report(report):
    payload = report.to_dict() if isinstance(report, RunReport) else report
    return json.dumps(payload, indent=2)


def read_report(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def config_from_args(rank, a, b, max_iter, tol, seed, slack_mode):
    return SolverConfig(rank=rank, a=a, b=b, max_iter=max_iter, tol=tol,
                        seed=seed, slack_mode=slack_mode)
