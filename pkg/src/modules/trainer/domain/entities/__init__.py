"""Training entities"""

from .agent import Agent, restore_params
from .rollout_buffer import RolloutBuffer, Transition

__all__ = ["Agent", "restore_params", "RolloutBuffer", "Transition"]
