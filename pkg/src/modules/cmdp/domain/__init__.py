"""Constrained optimization domain"""

from .entities import LagrangianState
from .services import EmaStatistic, WarmupMonitor
from .value_objects import DualAdvantages, normalize

__all__ = ["LagrangianState", "EmaStatistic", "WarmupMonitor", "DualAdvantages", "normalize"]
