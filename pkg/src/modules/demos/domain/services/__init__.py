"""Demonstration domain services"""

from .augmentation import augment_symmetric
from .generators import (
    GAIT_FEATURES,
    REACH_FEATURES,
    generate_gait_demo,
    generate_reach_demo,
    reach_point,
)

__all__ = [
    "augment_symmetric",
    "GAIT_FEATURES",
    "REACH_FEATURES",
    "generate_gait_demo",
    "generate_reach_demo",
    "reach_point",
]
