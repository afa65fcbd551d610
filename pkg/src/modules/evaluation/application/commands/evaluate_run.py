"""Evaluate a run's checkpoint"""

from pathlib import Path
from typing import Optional

from pydantic import Field

from core.application.base_command import Command, CommandHandler
from core.exceptions import NotFoundException
from config.run_config import RunConfig
from shared.utils import RandomStreams
from modules.trainer.application.services import TrainingService
from modules.trainer.infrastructure.persistence import RunDirectory
from ...infrastructure.persistence import ScoresTable
from ..dto import ScoreReport
from ..services.rollout_evaluator import PolicyController, RolloutEvaluator


class EvaluateRunCommand(Command):
    """Defaults come from the run's config snapshot (eval.* keys)"""
    run_dir: Path
    checkpoint: Optional[Path] = None
    episodes: Optional[int] = Field(default=None, ge=1)
    deterministic: Optional[bool] = None
    eta: Optional[float] = Field(default=None, gt=0)
    seed: Optional[int] = None


class EvaluateRunHandler(CommandHandler[ScoreReport]):
    """Restores the checkpoint into freshly built networks and appends to scores.csv"""
    
    def __init__(self, training: TrainingService):
        self._training = training
    
    def handle(self, command: EvaluateRunCommand) -> ScoreReport:
        run = RunDirectory(command.run_dir)
        config = RunConfig.from_snapshot(run.config_path)
        path = command.checkpoint or run.latest_checkpoint()
        if path is None:
            raise NotFoundException("Checkpoint", str(run.checkpoints_dir))
        
        session = self._training.build_session(config)
        iteration = self._training.restore(session, Path(path))
        
        deterministic = config.eval.deterministic if command.deterministic is None else command.deterministic
        seed = config.train.seed if command.seed is None else command.seed
        streams = RandomStreams(seed, iteration)
        evaluator = RolloutEvaluator.for_config(config, session.demo_set.primary, command.eta)
        report = evaluator.rollout_metrics(
            PolicyController(session.agent.policy, streams.get("eval/action"), deterministic),
            command.episodes or config.eval.episodes,
            streams.get("eval/reset"),
            deterministic,
        )
        report.iteration = iteration
        report.checkpoint = str(path)
        ScoresTable(run.scores_path).append(report)
        return report
