"""Environment entities"""

from .environment import Environment, PlanarGait, PointReach

__all__ = ["Environment", "PlanarGait", "PointReach"]
