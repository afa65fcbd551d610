"""Training domain services"""

from .gae import compute_gae
from .ppo_objective import clipped_surrogate

__all__ = ["compute_gae", "clipped_surrogate"]
