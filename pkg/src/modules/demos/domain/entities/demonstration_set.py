"""Demonstration set with its symmetry group"""

from typing import List, Optional, Sequence

import numpy as np

from core.exceptions import DimensionMismatchException
from modules.envs.domain.services.symmetry import SymmetryOperator
from ..exceptions.demo_exceptions import InvalidDemoException
from .demo_trajectory import DemoTrajectory


class DemonstrationSet:
    """
    Trajectories sharing one feature layout, the symmetry operators that act on
    it, and the transition pairs the discriminator trains on.
    Treated as immutable after construction.
    """
    
    def __init__(
        self,
        trajectories: Sequence[DemoTrajectory],
        group: Sequence[SymmetryOperator] = (),
        pairs: Optional[np.ndarray] = None,
        augmentation_rounds: int = 0,
    ):
        if not trajectories:
            raise InvalidDemoException("a demonstration set needs at least one trajectory")
        dims = {t.feature_dim for t in trajectories}
        if len(dims) != 1:
            raise InvalidDemoException(f"trajectories disagree on feature dimension: {sorted(dims)}")
        self.trajectories: List[DemoTrajectory] = list(trajectories)
        self.group: List[SymmetryOperator] = list(group)
        self.feature_dim: int = dims.pop()
        for op in self.group:
            if op.feature_dim != self.feature_dim:
                raise DimensionMismatchException(f"operator '{op.name}'", self.feature_dim, op.feature_dim)
        if pairs is None:
            pairs = np.concatenate([t.pairs() for t in self.trajectories], axis=0)
        pairs = np.array(pairs, dtype=np.float64)
        if pairs.ndim != 2 or pairs.shape[1] != 2 * self.feature_dim:
            raise DimensionMismatchException("demo pairs", 2 * self.feature_dim, pairs.shape)
        pairs.setflags(write=False)
        self.pairs = pairs
        self.augmentation_rounds = int(augmentation_rounds)
    
    @property
    def pair_count(self) -> int:
        return int(self.pairs.shape[0])
    
    @property
    def primary(self) -> DemoTrajectory:
        """Trajectory used for phase tracking and DTW references"""
        return self.trajectories[0]
    
    def sample_pairs(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Draw pairs uniformly with replacement"""
        return self.pairs[rng.integers(0, self.pair_count, size=count)]
