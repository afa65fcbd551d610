"""Environment domain: states, dynamics, symmetry operators"""

from .entities import Environment, PlanarGait, PointReach
from .services import MIRROR, SymmetryOperator, symmetry_ops
from .value_objects import PlanarGaitState, PointReachState, StepResult

__all__ = [
    "Environment",
    "PlanarGait",
    "PointReach",
    "MIRROR",
    "SymmetryOperator",
    "symmetry_ops",
    "PlanarGaitState",
    "PointReachState",
    "StepResult",
]
