"""Style domain services"""

from .rewards import adversarial_reward, score_to_reward, symmetric_style_reward, tracking_reward

__all__ = ["adversarial_reward", "score_to_reward", "symmetric_style_reward", "tracking_reward"]
