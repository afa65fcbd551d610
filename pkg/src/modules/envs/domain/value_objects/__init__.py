"""Environment value objects"""

from .env_state import PointReachState, PlanarGaitState, StepResult

__all__ = ["PointReachState", "PlanarGaitState", "StepResult"]
