"""Evaluation persistence"""

from .scores_table import ScoresTable

__all__ = ["ScoresTable"]
