"""Training checkpoints"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict

import numpy as np

from core.interfaces.repositories import IRepository
from modules.tensor_nn.infrastructure.persistence import NamedArrayRepository, NamedArrays
from ...domain.exceptions import CheckpointMismatchException

logger = logging.getLogger(__name__)


@dataclass
class Checkpoint:
    """
    Named arrays plus metadata. Array names:
    policy.mean.<k>.weight|bias, policy.log_std, critic_task.<k>.*, critic_style.<k>.*,
    discriminator.<k>.*, adam.<net>.<i>.m|v, adam.<net>.step, lagrangian.*, meta.*
    """
    arrays: NamedArrays
    env_id: str
    iteration: int
    obs_dim: int
    action_dim: int
    extra_meta: Dict[str, np.ndarray] = field(default_factory=dict)
    
    def to_named_arrays(self) -> NamedArrays:
        return {
            **self.arrays,
            "meta.env_id": np.array(self.env_id),
            "meta.iteration": np.array(self.iteration, dtype=np.int64),
            "meta.obs_dim": np.array(self.obs_dim, dtype=np.int64),
            "meta.action_dim": np.array(self.action_dim, dtype=np.int64),
            **self.extra_meta,
        }
    
    @classmethod
    def from_named_arrays(cls, named: NamedArrays) -> "Checkpoint":
        try:
            env_id = str(named["meta.env_id"])
            iteration = int(named["meta.iteration"])
            obs_dim = int(named["meta.obs_dim"])
            action_dim = int(named["meta.action_dim"])
        except KeyError as e:
            raise CheckpointMismatchException(f"missing metadata {e}")
        arrays = {k: v for k, v in named.items() if not k.startswith("meta.")}
        extra = {k: v for k, v in named.items() if k.startswith("meta.") and k not in _META_KEYS}
        return cls(arrays, env_id, iteration, obs_dim, action_dim, extra)
    
    def require_env(self, env_id: str, obs_dim: int, action_dim: int) -> None:
        """
        Raises:
            CheckpointMismatchException: Saved for another environment layout
        """
        if (self.env_id, self.obs_dim, self.action_dim) != (env_id, obs_dim, action_dim):
            raise CheckpointMismatchException(
                "environment differs",
                expected=(env_id, obs_dim, action_dim),
                actual=(self.env_id, self.obs_dim, self.action_dim),
            )


_META_KEYS = {"meta.env_id", "meta.iteration", "meta.obs_dim", "meta.action_dim"}


class CheckpointRepository(IRepository[Checkpoint]):
    """Checkpoint files on top of the .npz named-array store"""
    
    def __init__(self, store: NamedArrayRepository = None):
        self._store = store or NamedArrayRepository()
    
    def save(self, item: Checkpoint, path: Path) -> Path:
        written = self._store.save(item.to_named_arrays(), path)
        logger.info("Checkpoint written", extra={"path": str(written), "iteration": item.iteration})
        return written
    
    def load(self, path: Path) -> Checkpoint:
        return Checkpoint.from_named_arrays(self._store.load(path))
