"""Style domain"""

from .entities import DiscriminatorHead
from .services import adversarial_reward, score_to_reward, symmetric_style_reward, tracking_reward
from .value_objects import DiscriminatorLosses, TrackingRewardSpec

__all__ = [
    "DiscriminatorHead",
    "adversarial_reward",
    "score_to_reward",
    "symmetric_style_reward",
    "tracking_reward",
    "DiscriminatorLosses",
    "TrackingRewardSpec",
]
