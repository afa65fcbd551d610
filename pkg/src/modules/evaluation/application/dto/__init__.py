"""Evaluation DTOs"""

from .score_dto import SCORE_COLUMNS, SWEEP_COLUMNS, EpisodeScore, ScoreReport, SweepRow

__all__ = ["SCORE_COLUMNS", "SWEEP_COLUMNS", "EpisodeScore", "ScoreReport", "SweepRow"]
