"""Validation utilities"""

from .validators import NumericValidators

__all__ = ["NumericValidators"]
