"""Tidy per-figure CSVs from run directories"""

import json
from pathlib import Path
from typing import Dict, List, Sequence

import pandas as pd
from pydantic import Field

from core.application.base_command import Command, CommandHandler
from core.exceptions import NotFoundException
from modules.trainer.infrastructure.persistence import RunDirectory

TIDY_COLUMNS = ["figure", "method", "alpha", "seed", "iteration", "metric", "value"]

# figure name -> metrics.csv columns plotted against iteration
FIGURES: Dict[str, List[str]] = {
    "task_reward": ["task_return", "task_return_ema"],
    "imitation_score": ["imitation_score"],
    "multiplier": ["sigma_lambda", "v_g_star", "constraint_residual"],
}


class ExportPlotDataCommand(Command):
    runs: List[Path] = Field(min_length=1)
    output: Path


class ExportPlotDataHandler(CommandHandler[List[Path]]):
    """
    Each path is a run directory or a directory searched recursively for runs
    (a sweep output, say). Writes <output>/<figure>.csv.
    """
    
    def handle(self, command: ExportPlotDataCommand) -> List[Path]:
        run_dirs = discover_runs(command.runs)
        if not run_dirs:
            raise NotFoundException("Run directory", ", ".join(str(p) for p in command.runs))
        frames = [load_run(run) for run in run_dirs]
        metrics = pd.concat(frames, ignore_index=True)
        
        command.output.mkdir(parents=True, exist_ok=True)
        written = []
        for figure, columns in FIGURES.items():
            tidy = tidy_figure(metrics, figure, columns)
            path = command.output / f"{figure}.csv"
            tidy.to_csv(path, index=False)
            written.append(path)
        return written


def discover_runs(paths: Sequence[Path]) -> List[Path]:
    found = set()
    for path in paths:
        path = Path(path)
        if RunDirectory(path).metrics_path.is_file():
            found.add(path)
        elif path.is_dir():
            found.update(p.parent for p in path.rglob("metrics.csv") if (p.parent / "config.json").is_file())
    return sorted(found)


def load_run(run_dir: Path) -> pd.DataFrame:
    """metrics.csv with method / alpha / seed columns from the config snapshot"""
    run = RunDirectory(run_dir)
    if not run.config_path.is_file():
        raise NotFoundException("Config snapshot", str(run.config_path))
    snapshot = json.loads(run.config_path.read_text(encoding="utf-8"))
    frame = pd.read_csv(run.metrics_path)
    frame["method"] = snapshot["cmdp"]["method"]
    frame["alpha"] = float(snapshot["cmdp"]["alpha"])
    frame["seed"] = int(snapshot["train"]["seed"])
    return frame


def tidy_figure(metrics: pd.DataFrame, figure: str, columns: Sequence[str]) -> pd.DataFrame:
    present = [c for c in columns if c in metrics.columns]
    tidy = metrics.melt(
        id_vars=["method", "alpha", "seed", "iteration"],
        value_vars=present,
        var_name="metric",
        value_name="value",
    ).dropna(subset=["value"])
    tidy.insert(0, "figure", figure)
    tidy = tidy.sort_values(["method", "alpha", "seed", "metric", "iteration"], kind="mergesort")
    return tidy[TIDY_COLUMNS].reset_index(drop=True)
