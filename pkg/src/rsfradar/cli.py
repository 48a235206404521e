"""Command-line front end for the Monte-Carlo studies.

Each subcommand runs one study with its documented defaults, optionally
overridden by a key = value configuration file and then by the command-line
flags, and writes one CSV file.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from . import harness
from .harness import ScenarioConfig, load_config, scenario_va

STUDIES = {
    "crb-scatter": harness.run_crb_scatter,
    "objective-compare": harness.run_objective_comparison,
    "convergence": harness.run_convergence,
    "batch-compare": harness.run_batch_comparison,
    "sequential-compare": harness.run_sequential_comparison,
    "deltaf-sweep": harness.run_deltaf_sweep,
    "k-sweep": harness.run_k_sweep,
}


def study_defaults(study: str) -> ScenarioConfig:
    """Per-study default scenario (trial counts sized for interactive use;
    the larger published-figure counts go in a config file)."""
    base = scenario_va()
    overrides: dict = {
        "crb-scatter": dict(n_codes=100, n_trials=1000),
        "objective-compare": dict(n_codes=2000),
        "convergence": dict(n_trials=100),
        "batch-compare": dict(n_trials=1000, snr_db=None),
        "sequential-compare": dict(n_trials=1000, snr_db=None, code_mode="sequential-mode-2"),
        "deltaf-sweep": dict(
            n_trials=200, n_designed=5, targets=None,
            snr_db=None, sigma2_db=0.0, code_mode="sequential-mode-2",
        ),
        "k-sweep": dict(
            n_trials=500, n_designed=5, targets=None,
            snr_db=None, sigma2_db=-5.0, code_mode="sequential-mode-2",
        ),
    }[study]
    return dataclasses.replace(base, **overrides)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsfradar",
        description="Random stepped frequency radar simulation studies",
    )
    sub = parser.add_subparsers(dest="study", required=True)
    for name, runner in STUDIES.items():
        p = sub.add_parser(name, help=runner.__doc__.splitlines()[0].lower().rstrip("."))
        p.add_argument("--config", help="key = value scenario file")
        p.add_argument("--seed", type=int, help="root RNG seed (non-negative)")
        p.add_argument("--trials", type=int, help="Monte-Carlo trials per point")
        p.add_argument("--out", required=True, help="output CSV path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = study_defaults(args.study)
    try:
        if args.config:
            cfg = load_config(args.config, base=cfg)
        overrides: dict = {"out": args.out}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.trials is not None:
            overrides["n_trials"] = args.trials
        cfg = dataclasses.replace(cfg, **overrides)
        rows = STUDIES[args.study](cfg)
    except (ValueError, OSError) as exc:
        print(f"rsfradar: error: {exc}", file=sys.stderr)
        return 2
    print(f"{args.study}: wrote {len(rows)} rows to {cfg.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
