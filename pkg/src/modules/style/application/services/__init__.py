"""Style application services"""

from .style_reward_service import StyleRewardService

__all__ = ["StyleRewardService"]
