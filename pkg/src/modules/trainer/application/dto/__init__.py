"""Training DTOs"""

from .training_dto import IterationMetrics, METRICS_COLUMNS, PpoStats, RolloutStats, TrainingResult

__all__ = ["IterationMetrics", "METRICS_COLUMNS", "PpoStats", "RolloutStats", "TrainingResult"]
