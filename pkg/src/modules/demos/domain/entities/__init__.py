"""Demonstration entities"""

from .demo_trajectory import DemoTrajectory
from .demonstration_set import DemonstrationSet

__all__ = ["DemoTrajectory", "DemonstrationSet"]
