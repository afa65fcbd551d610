"""Write a generated demo to CSV"""

from pathlib import Path
from typing import Optional

from core.application.base_command import Command, CommandHandler
from core.domain.enums import EnvIdEnum
from config.run_config import RunConfig
from ...infrastructure.persistence import DemoCsvRepository
from ..services.demo_service import DemoService


class GenerateDemoCommand(Command):
    env: EnvIdEnum
    output: Path
    config: Optional[RunConfig] = None


class GenerateDemoHandler(CommandHandler[Path]):
    def __init__(self, service: DemoService, repository: DemoCsvRepository):
        self._service = service
        self._repository = repository
    
    def handle(self, command: GenerateDemoCommand) -> Path:
        config = command.config or RunConfig.build({})
        config = config.with_overrides({"env": command.env.value})
        return self._repository.save(self._service.generate(config), command.output)
