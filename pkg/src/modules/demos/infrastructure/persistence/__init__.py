"""Demonstration persistence"""

from .demo_csv_repository import DemoCsvRepository

__all__ = ["DemoCsvRepository"]
