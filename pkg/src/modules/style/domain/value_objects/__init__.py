"""Style value objects"""

from .discriminator_losses import DiscriminatorLosses
from .tracking_reward_spec import TrackingRewardSpec

__all__ = ["DiscriminatorLosses", "TrackingRewardSpec"]
