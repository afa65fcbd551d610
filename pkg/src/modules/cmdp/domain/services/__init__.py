"""Constrained optimization domain services"""

from .return_statistics import EmaStatistic, WarmupMonitor

__all__ = ["EmaStatistic", "WarmupMonitor"]
