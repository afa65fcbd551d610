"""Constrained optimization domain events"""

from .cmdp_events import ConstraintUpdatedEvent, MultiplierUpdatedEvent, WarmupFinishedEvent

__all__ = ["ConstraintUpdatedEvent", "MultiplierUpdatedEvent", "WarmupFinishedEvent"]
