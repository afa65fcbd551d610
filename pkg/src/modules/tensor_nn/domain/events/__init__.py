"""Network domain events"""

from .nn_events import GradientOverflowEvent

__all__ = ["GradientOverflowEvent"]
