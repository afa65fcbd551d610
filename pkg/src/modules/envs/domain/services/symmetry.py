"""Morphological symmetry operators"""

from typing import List, Sequence

import numpy as np

from core.domain.enums import EnvIdEnum
from core.domain.value_objects import ValueObject
from core.exceptions import DimensionMismatchException, DomainException
from ..exceptions.env_exceptions import UnknownEnvironmentException


class SymmetryOperator(ValueObject):
    """
    Index permutation acting on features, observations and actions.
    Permutations are involutions: applying an operator twice is the identity.
    """
    
    def __init__(
        self,
        name: str,
        feature_perm: Sequence[int],
        obs_perm: Sequence[int],
        action_perm: Sequence[int],
    ):
        self.name = name
        self.feature_perm = np.array(feature_perm, dtype=np.int64)
        self.obs_perm = np.array(obs_perm, dtype=np.int64)
        self.action_perm = np.array(action_perm, dtype=np.int64)
        for perm in (self.feature_perm, self.obs_perm, self.action_perm):
            if not np.array_equal(perm[perm], np.arange(perm.size)):
                raise DomainException(f"Symmetry operator '{name}' is not an involution")
        self._seal()
    
    @property
    def feature_dim(self) -> int:
        return int(self.feature_perm.size)
    
    def features(self, x: np.ndarray) -> np.ndarray:
        """Apply to [..., d] feature arrays"""
        return self._permute(x, self.feature_perm, "symmetry feature")
    
    def pairs(self, x: np.ndarray) -> np.ndarray:
        """Apply to [..., 2d] concatenated (features, next features)"""
        x = np.asarray(x, dtype=np.float64)
        d = self.feature_dim
        if x.shape[-1] != 2 * d:
            raise DimensionMismatchException("symmetry pair", 2 * d, x.shape[-1])
        return np.concatenate([self.features(x[..., :d]), self.features(x[..., d:])], axis=-1)
    
    def observations(self, x: np.ndarray) -> np.ndarray:
        return self._permute(x, self.obs_perm, "symmetry observation")
    
    def actions(self, x: np.ndarray) -> np.ndarray:
        return self._permute(x, self.action_perm, "symmetry action")
    
    @staticmethod
    def _permute(x: np.ndarray, perm: np.ndarray, what: str) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if x.shape[-1] != perm.size:
            raise DimensionMismatchException(what, perm.size, x.shape[-1])
        return x[..., perm]


# Gait layouts: features (qL, qR, dqL, dqR); obs (vx, qL, qR, dqL, dqR, v*, aL, aR).
MIRROR = SymmetryOperator(
    name="mirror",
    feature_perm=[1, 0, 3, 2],
    obs_perm=[0, 2, 1, 4, 3, 5, 7, 6],
    action_perm=[1, 0],
)


def symmetry_ops(env_id) -> List[SymmetryOperator]:
    """
    Symmetry group (identity excluded) of an environment.
    
    Raises:
        UnknownEnvironmentException: Unrecognized id
    """
    try:
        env = EnvIdEnum(env_id.value if isinstance(env_id, EnvIdEnum) else env_id)
    except ValueError:
        raise UnknownEnvironmentException(str(env_id))
    if env == EnvIdEnum.PlanarGait:
        return [MIRROR]
    return []
