"""Constrained optimization application services"""

from .constraint_controller import ConstraintController, PINNED_TASK_WEIGHTS

__all__ = ["ConstraintController", "PINNED_TASK_WEIGHTS"]
