"""Reference feature trajectory"""

from typing import Optional, Sequence

import numpy as np

from core.domain.value_objects import ValueObject
from ..exceptions.demo_exceptions import InvalidDemoException


class DemoTrajectory(ValueObject):
    """
    T x d feature samples at a uniform period.
    Immutable once built; T >= 2 and every value finite.
    """
    
    def __init__(
        self,
        features,
        period: float,
        name: str = "demo",
        feature_names: Optional[Sequence[str]] = None,
    ):
        features = np.array(features, dtype=np.float64)
        if features.ndim != 2 or features.shape[0] < 2:
            raise InvalidDemoException(f"need a T x d array with T >= 2, got shape {features.shape}", name)
        if not np.all(np.isfinite(features)):
            raise InvalidDemoException("non-finite feature values", name)
        if not period > 0:
            raise InvalidDemoException(f"sampling period must be > 0, got {period}", name)
        if feature_names is None:
            feature_names = [f"f{i}" for i in range(features.shape[1])]
        if len(feature_names) != features.shape[1]:
            raise InvalidDemoException(
                f"{len(feature_names)} feature names for {features.shape[1]} columns", name
            )
        self.features = features
        self.period = float(period)
        self.name = name
        self.feature_names = tuple(feature_names)
        self._seal()
    
    @property
    def length(self) -> int:
        return int(self.features.shape[0])
    
    @property
    def feature_dim(self) -> int:
        return int(self.features.shape[1])
    
    @property
    def times(self) -> np.ndarray:
        return np.arange(self.length) * self.period
    
    def pairs(self) -> np.ndarray:
        """Consecutive (s, s') pairs, [T-1 x 2d]"""
        return np.concatenate([self.features[:-1], self.features[1:]], axis=1)
    
    def at_phase(self, step: int) -> np.ndarray:
        """Feature row for a policy step; clock-synchronized and held at the last sample"""
        return self.features[min(int(step), self.length - 1)]
