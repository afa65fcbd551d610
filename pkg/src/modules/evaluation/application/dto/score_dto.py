"""Evaluation data transfer objects"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from core.application.dto import DTO

SCORE_COLUMNS = [
    "iteration",
    "checkpoint",
    "env_id",
    "episodes",
    "deterministic",
    "eta",
    "task_return_mean",
    "task_return_std",
    "dtw_mean",
    "dtw_std",
    "imitation_score_mean",
    "imitation_score_std",
    "symmetry_score_mean",
    "symmetry_score_std",
    "mechanical_work_mean",
    "mechanical_work_std",
    "air_time_left_mean",
    "air_time_left_std",
    "air_time_right_mean",
    "air_time_right_std",
]


class EpisodeScore(DTO):
    """Metrics of a single evaluation episode"""
    task_return: float
    dtw: float = Field(ge=0)
    imitation_score: float = Field(ge=0, le=1)
    symmetry_score: Optional[float] = Field(default=None, ge=0, le=1)
    mechanical_work: float = Field(ge=0)
    air_time: Optional[List[float]] = None


class ScoreReport(DTO):
    """
    Aggregated evaluation of a policy or controller.
    Std fields are population standard deviations (0 for a single episode).
    Symmetry and air-time are None where the environment defines none.
    """
    env_id: str
    episodes: int = Field(ge=1)
    deterministic: bool
    eta: float = Field(gt=0)
    task_return_mean: float
    task_return_std: float
    dtw_mean: float = Field(ge=0)
    dtw_std: float
    imitation_score_mean: float = Field(ge=0, le=1)
    imitation_score_std: float
    symmetry_score_mean: Optional[float] = Field(default=None, ge=0, le=1)
    symmetry_score_std: Optional[float] = None
    mechanical_work_mean: float
    mechanical_work_std: float
    mechanical_work_per_episode: List[float]
    air_time_left_mean: Optional[float] = None
    air_time_left_std: Optional[float] = None
    air_time_right_mean: Optional[float] = None
    air_time_right_std: Optional[float] = None
    iteration: Optional[int] = None
    checkpoint: Optional[str] = None

    def row(self) -> Dict[str, Any]:
        """scores.csv row"""
        return self.model_dump(include=set(SCORE_COLUMNS))

    def summary(self) -> str:
        """Human-readable one-liner for the console"""
        parts = [
            f"task_return={self.task_return_mean:.4g}±{self.task_return_std:.3g}",
            f"dtw={self.dtw_mean:.4g}",
            f"S_imit={self.imitation_score_mean:.4f}",
        ]
        if self.symmetry_score_mean is not None:
            parts.append(f"S_sym={self.symmetry_score_mean:.4f}")
        parts.append(f"work={self.mechanical_work_mean:.4g}")
        if self.air_time_left_mean is not None:
            parts.append(f"air_time=({self.air_time_left_mean:.3f}, {self.air_time_right_mean:.3f})")
        return f"{self.env_id} eta={self.eta:g} episodes={self.episodes}: " + " ".join(parts)


class SweepRow(DTO):
    """sweep_summary.csv row: one (alpha, seed) run"""
    alpha: float
    seed: int
    run_dir: str
    final_task_return_ema: Optional[float] = None
    v_g_star: Optional[float] = None
    task_return_mean: float
    imitation_score_mean: float
    symmetry_score_mean: Optional[float] = None


SWEEP_COLUMNS = list(SweepRow.model_fields)
