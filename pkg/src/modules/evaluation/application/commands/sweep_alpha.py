"""Train and evaluate over a grid of constraint thresholds"""

from pathlib import Path
from typing import List

from pydantic import Field

from core.application.base_command import Command, CommandHandler
from config.run_config import RunConfig
from shared.utils import CsvTable
from modules.trainer.application.services import TrainingService
from ..dto import SWEEP_COLUMNS, SweepRow
from .evaluate_run import EvaluateRunCommand, EvaluateRunHandler


class SweepAlphaCommand(Command):
    config: RunConfig
    alphas: List[float] = Field(min_length=1)
    seeds: List[int] = Field(default=[0], min_length=1)
    output: Path


class SweepAlphaHandler(CommandHandler[List[SweepRow]]):
    """
    One run per (alpha, seed) under <output>/alpha_<a>/seed_<s>/; every alpha
    shares the same seeds. Rows go to <output>/sweep_summary.csv as they finish.
    """
    
    def __init__(self, training: TrainingService, evaluate: EvaluateRunHandler):
        self._training = training
        self._evaluate = evaluate
    
    def handle(self, command: SweepAlphaCommand) -> List[SweepRow]:
        summary = CsvTable(command.output / "sweep_summary.csv", SWEEP_COLUMNS)
        rows = []
        for alpha in command.alphas:
            for seed in command.seeds:
                config = command.config.with_overrides({
                    "cmdp.alpha": alpha,
                    "train.seed": seed,
                    "run_name": None,
                })
                run_dir = command.output / f"alpha_{alpha:g}" / f"seed_{seed}"
                result = self._training.train(config, run_dir)
                report = self._evaluate.handle(EvaluateRunCommand(run_dir=run_dir))
                row = SweepRow(
                    alpha=alpha,
                    seed=seed,
                    run_dir=str(run_dir),
                    final_task_return_ema=result.final_task_return_ema,
                    v_g_star=result.v_g_star,
                    task_return_mean=report.task_return_mean,
                    imitation_score_mean=report.imitation_score_mean,
                    symmetry_score_mean=report.symmetry_score_mean,
                )
                summary.append(row.model_dump())
                rows.append(row)
        return rows
