"""Demonstration domain"""

from .entities import DemonstrationSet, DemoTrajectory
from .services import augment_symmetric, generate_gait_demo, generate_reach_demo

__all__ = [
    "DemonstrationSet",
    "DemoTrajectory",
    "augment_symmetric",
    "generate_gait_demo",
    "generate_reach_demo",
]
