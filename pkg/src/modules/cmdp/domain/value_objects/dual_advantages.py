"""Per-group normalized advantages"""

import numpy as np

from core.domain.value_objects import ValueObject
from core.exceptions import DimensionMismatchException

_EPS = 1e-8


def normalize(values) -> np.ndarray:
    """Zero mean, unit std over the whole batch; a constant batch maps to zeros"""
    values = np.asarray(values, dtype=np.float64)
    centered = values - values.mean()
    std = centered.std()
    if std < _EPS:
        return np.zeros_like(values)
    return centered / std


class DualAdvantages(ValueObject):
    """Task and style advantages, each normalized over the buffer"""
    
    def __init__(self, task: np.ndarray, style: np.ndarray, task_value: float = float("nan")):
        task = np.array(task, dtype=np.float64)
        style = np.array(style, dtype=np.float64)
        if task.shape != style.shape:
            raise DimensionMismatchException("dual advantages", task.shape, style.shape)
        self.task = task
        self.style = style
        self.task_value = float(task_value)
        self._seal()
    
    @classmethod
    def from_raw(cls, task, style, task_value: float = float("nan")) -> "DualAdvantages":
        return cls(normalize(task), normalize(style), task_value)
