"""Mechanical work and air-time analogs"""

import numpy as np

from modules.envs.domain.entities import Environment, PlanarGait, PointReach
from modules.envs.domain.exceptions import UnknownEnvironmentException


def step_work(env: Environment, action, next_state) -> float:
    """
    |force x velocity| * dt summed over actuators for one step.

    PlanarGait: sum_j |k * a_j * dq'_j| * dt; PointReach: sum_j |a_max * a_j * v'_j| * dt.
    """
    a = np.clip(np.asarray(action, dtype=np.float64), -1.0, 1.0)
    if isinstance(env, PlanarGait):
        power = env.drive_gain * a * next_state.joint_vel
    elif isinstance(env, PointReach):
        power = env.max_acceleration * a * next_state.velocity
    else:
        raise UnknownEnvironmentException(type(env).__name__)
    return float(np.sum(np.abs(power)) * env.dt)


def air_time_fractions(joint_velocities, contact_threshold: float) -> np.ndarray:
    """Per-joint fraction of steps with |dq| below the threshold"""
    speeds = np.abs(np.atleast_2d(np.asarray(joint_velocities, dtype=np.float64)))
    return np.mean(speeds < contact_threshold, axis=0)
