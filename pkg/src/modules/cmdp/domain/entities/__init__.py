"""Constrained optimization entities"""

from .lagrangian_state import LagrangianState

__all__ = ["LagrangianState"]
