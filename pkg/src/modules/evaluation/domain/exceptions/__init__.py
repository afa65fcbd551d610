"""Evaluation exceptions"""

from .evaluation_exceptions import EmptySymmetryGroupException, EmptyTrajectoryException

__all__ = ["EmptySymmetryGroupException", "EmptyTrajectoryException"]
