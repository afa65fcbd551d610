"""Closed-form demonstration generators"""

from typing import Sequence

import numpy as np

from ..entities.demo_trajectory import DemoTrajectory
from ..exceptions.demo_exceptions import DegenerateGeometryException, InvalidDemoException

REACH_SAMPLES = 100
REACH_FEATURES = ("x", "y")
GAIT_FEATURES = ("qL", "qR", "dqL", "dqR")


def reach_point(goal: Sequence[float], amplitude: float, periods: int, u) -> np.ndarray:
    """
    Point at path parameter u in [0, 1]: the straight segment from the origin to
    the goal, displaced perpendicular by amplitude * sin(2 pi periods u).
    """
    goal = np.asarray(goal, dtype=np.float64)
    length = float(np.linalg.norm(goal))
    if length == 0.0:
        raise DegenerateGeometryException(goal)
    direction = goal / length
    normal = np.array([-direction[1], direction[0]])
    u = np.asarray(u, dtype=np.float64)[..., None]
    return u * goal + amplitude * np.sin(2.0 * np.pi * periods * u) * normal


def generate_reach_demo(
    goal: Sequence[float] = (0.8, 0.0),
    amplitude: float = 0.1,
    periods: int = 2,
    period: float = 0.05,
) -> DemoTrajectory:
    """
    Sinusoidal approach to a goal, 100 samples with exact endpoints.
    
    Raises:
        DegenerateGeometryException: Zero-length goal
    """
    if amplitude < 0 or periods < 1:
        raise InvalidDemoException("amplitude must be >= 0 and periods >= 1", "reach")
    u = np.linspace(0.0, 1.0, REACH_SAMPLES)
    points = reach_point(goal, amplitude, periods, u)
    points[0] = 0.0
    points[-1] = np.asarray(goal, dtype=np.float64)
    return DemoTrajectory(points, period, name="reach", feature_names=REACH_FEATURES)


def generate_gait_demo(
    frequency: float = 0.5,
    amplitude: float = 0.38,
    cycles: int = 6,
    period: float = 0.05,
) -> DemoTrajectory:
    """
    Anti-phase joint oscillation: qL = A sin(wt), qR = A sin(wt + pi) with exact
    derivatives, cycles / frequency / period samples.
    """
    if not frequency > 0:
        raise InvalidDemoException(f"frequency must be > 0, got {frequency}", "gait")
    length = int(round(cycles / frequency / period))
    if length < 2:
        raise InvalidDemoException(f"demo would have {length} samples", "gait")
    omega = 2.0 * np.pi * frequency
    t = np.arange(length) * period
    features = np.stack([
        amplitude * np.sin(omega * t),
        amplitude * np.sin(omega * t + np.pi),
        amplitude * omega * np.cos(omega * t),
        amplitude * omega * np.cos(omega * t + np.pi),
    ], axis=1)
    return DemoTrajectory(features, period, name="gait", feature_names=GAIT_FEATURES)
