"""Constrained optimization value objects"""

from .dual_advantages import DualAdvantages, normalize

__all__ = ["DualAdvantages", "normalize"]
