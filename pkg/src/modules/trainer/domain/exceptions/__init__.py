"""Training exceptions"""

from .trainer_exceptions import CheckpointMismatchException, TrainingDivergedException

__all__ = ["CheckpointMismatchException", "TrainingDivergedException"]
