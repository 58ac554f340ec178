"""Command-line interface.

Subcommands:
  synth    generate a synthetic labeled dataset as delimited text
  fit      fit the supervised factorization on a full dataset
  eval     fit on a stratified train split and evaluate on the test split
  compare  run baseline NMF and the supervised variant side by side

Exit code 0 on success; any library or IO error prints a diagnostic to
stderr and exits nonzero.
"""

import argparse
import sys
import time
from dataclasses import asdict

from . import __version__
from .data import generate_synthetic, load_dataset, save_dataset
from .errors import MMDNMFError
from .evaluation import margin_stats
from .experiment import (config_from_args, dumps_report, fit_report_to_dict,
                         run_experiment, write_report)
from .pairing import build_pair_sets
from .solver import fit_mmdnmf


def _add_solver_flags(p):
    p.add_argument("--rank", type=int, required=True, help="factorization rank m")
    p.add_argument("--a", type=float, default=1.0, help="within-pair trade-off")
    p.add_argument("--b", type=float, default=1.0, help="between-pair trade-off")
    p.add_argument("--max-iter", type=int, default=500)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slack-mode", choices=["paper", "direct"], default="direct")


def _add_io_flags(p):
    p.add_argument("--input", required=True, help="delimited text file with header row")
    p.add_argument("--label-col", default="label", help="label column name")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--output", default=None, help="report path (default: stdout)")
    p.add_argument("--quiet", action="store_true", help="omit the per-iteration trace")


def build_parser():
    parser = argparse.ArgumentParser(prog="mmdnmf",
                                     description="Max-min distance nonnegative matrix factorization")
    parser.add_argument("--version", action="version", version=f"mmdnmf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic labeled dataset")
    p.add_argument("--classes", type=int, default=3)
    p.add_argument("--per-class", type=int, default=20)
    p.add_argument("--dim", type=int, default=20)
    p.add_argument("--separation", type=float, default=5.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--label-col", default="label")
    p.add_argument("--output", required=True)

    p = sub.add_parser("fit", help="fit the supervised factorization")
    _add_io_flags(p)
    _add_solver_flags(p)

    p = sub.add_parser("eval", help="fit on a train split and evaluate on the test split")
    _add_io_flags(p)
    _add_solver_flags(p)
    p.add_argument("--test-fraction", type=float, default=0.25)
    p.add_argument("--split-seed", type=int, default=0)

    p = sub.add_parser("compare", help="baseline NMF vs supervised, same split and config")
    _add_io_flags(p)
    _add_solver_flags(p)
    p.add_argument("--test-fraction", type=float, default=0.25)
    p.add_argument("--split-seed", type=int, default=0)
    return parser


def _emit(report_dict, output):
    if output:
        write_report(report_dict, output)
    else:
        print(dumps_report(report_dict))


def cmd_synth(args):
    dataset = generate_synthetic(args.classes, args.per_class, args.dim,
                                 args.separation, args.seed)
    save_dataset(dataset, args.output, label_column=args.label_col)
    print(f"wrote {dataset.n_samples} samples x {dataset.n_features} features to {args.output}")


def cmd_fit(args):
    dataset = load_dataset(args.input, args.label_col, args.delimiter)
    config = config_from_args(args.rank, args.a, args.b, args.max_iter,
                              args.tol, args.seed, args.slack_mode)
    start = time.perf_counter()
    report = fit_mmdnmf(dataset.matrix, dataset.labels, config)
    pairs = build_pair_sets(dataset.labels)
    max_w, min_b = margin_stats(report.coeffs, pairs)
    _emit({
        "config": asdict(config),
        "mmdnmf": fit_report_to_dict(report, include_trace=not args.quiet),
        "margins": {"max_within_dist": max_w, "min_between_dist": min_b},
        "wall_clock_seconds": time.perf_counter() - start,
        "version": __version__,
    }, args.output)


def _experiment(args):
    dataset = load_dataset(args.input, args.label_col, args.delimiter)
    config = config_from_args(args.rank, args.a, args.b, args.max_iter,
                              args.tol, args.seed, args.slack_mode)
    return run_experiment(dataset, config, args.test_fraction, args.split_seed,
                          include_trace=not args.quiet)


def cmd_eval(args):
    report = _experiment(args)
    _emit({
        "config": report.config,
        "mmdnmf": report.mmdnmf,
        "evaluation": {"mmdnmf": report.evaluation["mmdnmf"]},
        "wall_clock_seconds": report.wall_clock_seconds,
        "version": report.version,
    }, args.output)


def cmd_compare(args):
    _emit(_experiment(args), args.output)


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {"synth": cmd_synth, "fit": cmd_fit, "eval": cmd_eval, "compare": cmd_compare}
    try:
        handlers[args.command](args)
    except (MMDNMFError, OSError) as exc:
        print(f"mmdnmf: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
