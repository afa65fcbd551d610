"""Imitation and symmetry scores"""

from typing import Optional, Sequence

import numpy as np

from core.domain.enums import EnvIdEnum, TrajectorySourceEnum
from core.exceptions import DomainException
from modules.envs.domain.services.symmetry import SymmetryOperator
from ..exceptions.evaluation_exceptions import EmptySymmetryGroupException
from ..value_objects.trajectory import Trajectory
from .dtw import relaxed_dtw

# PointReach: position; PlanarGait: joint positions.
DTW_CHANNELS = {
    EnvIdEnum.PointReach: (0, 1),
    EnvIdEnum.PlanarGait: (0, 1),
}


def select_channels(trajectory: Trajectory, channels: Optional[Sequence[int]]) -> Trajectory:
    if channels is None:
        return trajectory
    return Trajectory(trajectory.features[:, list(channels)], trajectory.source)


def imitation_score(
    policy_traj: Trajectory,
    demo_traj: Trajectory,
    eta: float,
    channels: Optional[Sequence[int]] = None,
) -> float:
    """max(0, 1 - DTW(policy, demo) / eta)"""
    _require_eta(eta)
    distance = relaxed_dtw(select_channels(policy_traj, channels), select_channels(demo_traj, channels))
    return score_from_distance(distance, eta)


def symmetry_score(
    trajectory: Trajectory,
    group: Sequence[SymmetryOperator],
    eta: float,
    channels: Optional[Sequence[int]] = None,
) -> float:
    """
    max(0, 1 - mean_g DTW(tau, g(tau)) / eta); operators act on full feature rows.
    
    Raises:
        EmptySymmetryGroupException: No operator to compare against
    """
    if not group:
        raise EmptySymmetryGroupException()
    _require_eta(eta)
    base = select_channels(trajectory, channels)
    distances = [
        relaxed_dtw(base, select_channels(Trajectory(op.features(trajectory.features), TrajectorySourceEnum.Mirrored), channels))
        for op in group
    ]
    return score_from_distance(float(np.mean(distances)), eta)


def score_from_distance(distance: float, eta: float) -> float:
    return float(min(1.0, max(0.0, 1.0 - distance / eta)))


def _require_eta(eta: float) -> None:
    if not eta > 0:
        raise DomainException("Normalization constant eta must be > 0", {"eta": eta})
