"""Evaluation domain services"""

from .controllers import (
    Controller,
    PlanarGaitReplay,
    PointReachReplay,
    ZeroController,
    replay_controller,
)
from .dtw import relaxed_dtw
from .physical_metrics import air_time_fractions, step_work
from .scores import DTW_CHANNELS, imitation_score, score_from_distance, select_channels, symmetry_score

__all__ = [
    "Controller",
    "PlanarGaitReplay",
    "PointReachReplay",
    "ZeroController",
    "replay_controller",
    "relaxed_dtw",
    "air_time_fractions",
    "step_work",
    "DTW_CHANNELS",
    "imitation_score",
    "score_from_distance",
    "select_channels",
    "symmetry_score",
]
