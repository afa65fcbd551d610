"""Feature trajectory under evaluation"""

import numpy as np

from core.domain.enums import TrajectorySourceEnum
from core.domain.value_objects import ValueObject
from shared.validation import NumericValidators
from ..exceptions.evaluation_exceptions import EmptyTrajectoryException


class Trajectory(ValueObject):
    """n x d feature rows, n >= 1, tagged with where they came from"""
    
    def __init__(self, features, source: TrajectorySourceEnum = TrajectorySourceEnum.Policy):
        features = NumericValidators.as_float_array(features, "trajectory").copy()
        if features.ndim == 1:
            features = features[:, None]
        if features.ndim != 2 or features.shape[0] == 0:
            raise EmptyTrajectoryException(source.value)
        NumericValidators.require_finite(features, f"{source.value} trajectory")
        self.features = features
        self.source = source
        self._seal()
    
    def __len__(self) -> int:
        return int(self.features.shape[0])
    
    @property
    def dim(self) -> int:
        return int(self.features.shape[1])
