"""gen-demo subcommand"""

import argparse
import logging
from pathlib import Path

from core.domain.enums import EnvIdEnum
from core.exceptions.error_codes import ExitCode
from config.run_config import RunConfig, parse_overrides
from shared.cli import handle_cli_errors
from modules.demos.application.commands import GenerateDemoCommand
from .dependencies import get_generate_demo_handler

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen-demo", help="Write a generated demonstration CSV")
    parser.add_argument("--env", required=True, choices=EnvIdEnum.list())
    parser.add_argument("--out", required=True, type=Path, help="Destination CSV")
    parser.add_argument("--config", type=Path, help="Run config whose demo.* keys are used")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE")
    parser.set_defaults(handler=gen_demo)


@handle_cli_errors
def gen_demo(args: argparse.Namespace) -> int:
    config = RunConfig.load(args.config, parse_overrides(args.overrides))
    path = get_generate_demo_handler().handle(
        GenerateDemoCommand(env=EnvIdEnum(args.env), output=args.out, config=config)
    )
    print(path)
    return ExitCode.SUCCESS
