"""eval, sweep-alpha and export-plot-data subcommands"""

import argparse
from pathlib import Path

from core.exceptions.error_codes import ExitCode
from config.run_config import RunConfig, parse_overrides
from config.settings import get_settings
from shared.cli import handle_cli_errors
from modules.evaluation.application.commands import (
    EvaluateRunCommand,
    ExportPlotDataCommand,
    SweepAlphaCommand,
)
from .dependencies import get_evaluate_run_handler, get_export_plot_data_handler, get_sweep_alpha_handler


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("eval", help="Score a run's checkpoint against its demo")
    parser.add_argument("run_dir", type=Path)
    parser.add_argument("--checkpoint", type=Path, help="Defaults to the latest checkpoint")
    parser.add_argument("--episodes", type=int)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--deterministic", dest="deterministic", action="store_true", default=None)
    mode.add_argument("--stochastic", dest="deterministic", action="store_false")
    parser.add_argument("--eta", type=float, help="DTW normalization constant")
    parser.add_argument("--seed", type=int)
    parser.set_defaults(handler=evaluate)
    
    parser = subparsers.add_parser("sweep-alpha", help="Train and evaluate one run per alpha and seed")
    parser.add_argument("alphas", nargs="+", type=float)
    parser.add_argument("--seeds", nargs="+", type=int, default=[0])
    parser.add_argument("--config", type=Path)
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("--out", type=Path, help="Sweep directory (default: RUNS_DIR/sweep_<env>)")
    parser.set_defaults(handler=sweep_alpha)
    
    parser = subparsers.add_parser("export-plot-data", help="Tidy per-figure CSVs from run metrics")
    parser.add_argument("runs", nargs="+", type=Path, help="Run or sweep directories")
    parser.add_argument("--out", required=True, type=Path)
    parser.set_defaults(handler=export_plot_data)


@handle_cli_errors
def evaluate(args: argparse.Namespace) -> int:
    report = get_evaluate_run_handler().handle(EvaluateRunCommand(
        run_dir=args.run_dir,
        checkpoint=args.checkpoint,
        episodes=args.episodes,
        deterministic=args.deterministic,
        eta=args.eta,
        seed=args.seed,
    ))
    print(report.summary())
    return ExitCode.SUCCESS


@handle_cli_errors
def sweep_alpha(args: argparse.Namespace) -> int:
    config = RunConfig.load(args.config, parse_overrides(args.overrides))
    output = args.out or Path(get_settings().RUNS_DIR) / f"sweep_{config.env.value}"
    rows = get_sweep_alpha_handler().handle(
        SweepAlphaCommand(config=config, alphas=args.alphas, seeds=args.seeds, output=output)
    )
    for row in rows:
        print(f"alpha={row.alpha:g} seed={row.seed} S_imit={row.imitation_score_mean:.4f} run_dir={row.run_dir}")
    return ExitCode.SUCCESS


@handle_cli_errors
def export_plot_data(args: argparse.Namespace) -> int:
    paths = get_export_plot_data_handler().handle(ExportPlotDataCommand(runs=args.runs, output=args.out))
    for path in paths:
        print(path)
    return ExitCode.SUCCESS
