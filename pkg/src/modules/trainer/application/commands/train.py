"""Train (or resume) a run"""

from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import Field

from core.application.base_command import Command, CommandHandler
from config.run_config import RunConfig
from config.settings import Settings
from ...infrastructure.persistence import RunDirectory
from ..dto import TrainingResult
from ..services.training_service import TrainingService


class TrainCommand(Command):
    """
    Either a config for a fresh run, or resume_dir for a run to continue.
    Overrides are applied on top of the resumed snapshot (e.g. more iterations).
    """
    config: Optional[RunConfig] = None
    run_dir: Optional[Path] = None
    resume_dir: Optional[Path] = None
    overrides: Dict[str, Any] = Field(default_factory=dict)


class TrainHandler(CommandHandler[TrainingResult]):
    def __init__(self, service: TrainingService, settings: Settings):
        self._service = service
        self._settings = settings
    
    def handle(self, command: TrainCommand) -> TrainingResult:
        if command.resume_dir is not None:
            run = RunDirectory(command.resume_dir)
            config = RunConfig.from_snapshot(run.config_path)
            if command.overrides:
                config = config.with_overrides(command.overrides)
            return self._service.train(config, run.root, resume=True)
        
        config = command.config or RunConfig.load(None, command.overrides)
        run_dir = command.run_dir or Path(self._settings.RUNS_DIR) / config.display_name
        return self._service.train(config, run_dir)
