"""Constrained optimization exceptions"""

from .cmdp_exceptions import MultiplierStateException, WarmupStateException

__all__ = ["MultiplierStateException", "WarmupStateException"]
