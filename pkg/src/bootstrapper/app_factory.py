"""
Application factory for the command-line interface.
Configures logging, registers services and assembles subcommands.
"""

import argparse
import logging
from typing import Optional, Sequence

from config.settings import Settings, get_settings
from core.exceptions.error_codes import ExitCode
from infrastructure.logging import setup_logging
from bootstrapper.container import Container, get_container
from bootstrapper.module_loader import ModuleLoader
from modules.demos.application.commands import GenerateDemoHandler
from modules.demos.application.services import DemoService
from modules.demos.infrastructure.persistence import DemoCsvRepository
from modules.evaluation.application.commands import EvaluateRunHandler, ExportPlotDataHandler, SweepAlphaHandler
from modules.tensor_nn.application.services import NetworkFactory
from modules.tensor_nn.infrastructure.persistence import NamedArrayRepository
from modules.trainer.application.commands import TrainHandler
from modules.trainer.application.services import TrainingService
from modules.trainer.infrastructure.persistence import CheckpointRepository

logger = logging.getLogger(__name__)


def register_services(container: Container, settings: Settings) -> Container:
    """Wire the services the subcommands resolve"""
    container.register_instance(Settings, settings)
    container.register_singleton(DemoCsvRepository, DemoCsvRepository)
    container.register_singleton(NamedArrayRepository, NamedArrayRepository)
    container.register_singleton(NetworkFactory, NetworkFactory)
    container.register_singleton(
        CheckpointRepository, lambda: CheckpointRepository(container.resolve(NamedArrayRepository))
    )
    container.register_singleton(DemoService, lambda: DemoService(container.resolve(DemoCsvRepository)))
    container.register_singleton(
        TrainingService,
        lambda: TrainingService(
            container.resolve(DemoService),
            container.resolve(NetworkFactory),
            container.resolve(CheckpointRepository),
            settings,
        ),
    )
    for handler in (GenerateDemoHandler, TrainHandler, EvaluateRunHandler, SweepAlphaHandler, ExportPlotDataHandler):
        container.register_transient(handler, handler)
    return container


def create_cli(settings: Optional[Settings] = None) -> argparse.ArgumentParser:
    """
    Build the argument parser with every module's subcommands and
    register services in the global container.
    """
    settings = settings or get_settings()
    setup_logging(level=settings.LOG_LEVEL, format_type=settings.LOG_FORMAT, log_file=settings.LOG_FILE)
    container = get_container()
    if not container.is_registered(TrainingService):
        register_services(container, settings)
    
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Constrained style learning on desk-scale environments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    ModuleLoader().register_commands(subparsers)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments and dispatch to the subcommand handler.
    
    Returns:
        Process exit code (argparse usage errors exit with 2)
    """
    parser = create_cli()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.USAGE if e.code not in (0, None) else ExitCode.SUCCESS
    logger.debug("Dispatching", extra={"command": args.command})
    return int(args.handler(args))
