"""train subcommand"""

import argparse
from pathlib import Path

from core.exceptions.error_codes import ExitCode
from config.run_config import RunConfig, parse_overrides
from shared.cli import handle_cli_errors
from modules.trainer.application.commands import TrainCommand
from .dependencies import get_train_handler


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("train", help="Train a policy into a run directory")
    parser.add_argument("--config", type=Path, help="TOML run config")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    parser.add_argument("--run-dir", type=Path, help="Run directory (default: RUNS_DIR/<run name>)")
    parser.add_argument("--resume", type=Path, metavar="RUN_DIR", help="Continue an existing run")
    parser.set_defaults(handler=train)


@handle_cli_errors
def train(args: argparse.Namespace) -> int:
    overrides = parse_overrides(args.overrides)
    if args.resume is not None:
        command = TrainCommand(resume_dir=args.resume, overrides=overrides)
    else:
        config = RunConfig.load(args.config, overrides)
        command = TrainCommand(config=config, run_dir=args.run_dir)
    result = get_train_handler().handle(command)
    print(f"run_dir={result.run_dir}")
    print(f"final_checkpoint={result.final_checkpoint}")
    return ExitCode.SUCCESS
