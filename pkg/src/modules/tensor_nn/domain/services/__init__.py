"""Stateless network domain services"""

from .gradients import global_norm, clip_by_global_norm, all_finite

__all__ = ["global_norm", "clip_by_global_norm", "all_finite"]
