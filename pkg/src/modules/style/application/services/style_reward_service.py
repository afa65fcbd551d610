"""Style reward pathway used during rollouts and learning epochs"""

from typing import List, Optional

import numpy as np

from core.application.base_service import BaseService
from core.domain.enums import StyleModeEnum
from core.domain.events import DomainEvent
from core.exceptions import DomainException
from config.run_config import RunConfig
from modules.demos.domain.entities import DemonstrationSet
from modules.tensor_nn.application.services import NetworkFactory
from modules.tensor_nn.domain.entities import AdamState
from ...domain.entities import DiscriminatorHead
from ...domain.services import symmetric_style_reward, tracking_reward
from ...domain.value_objects import DiscriminatorLosses, TrackingRewardSpec


class StyleRewardService(BaseService):
    """
    Computes style rewards for policy transitions and, in adversarial mode,
    trains the discriminator on demo/policy pair batches.
    
    With symmetry on, rewards average over the symmetry group and both
    discriminator batches are augmented with their mirrored images.
    """
    
    def __init__(
        self,
        mode: StyleModeEnum,
        demo_set: DemonstrationSet,
        tracking_spec: Optional[TrackingRewardSpec] = None,
        head: Optional[DiscriminatorHead] = None,
        symmetry: bool = True,
        disc_batch_size: int = 256,
    ):
        super().__init__()
        self.mode = mode
        self.demo_set = demo_set
        self.tracking_spec = tracking_spec or TrackingRewardSpec.uniform(demo_set.feature_dim)
        self.head = head
        self.symmetry = symmetry
        self.disc_batch_size = int(disc_batch_size)
        if mode == StyleModeEnum.Adversarial and head is None:
            raise DomainException("Adversarial style mode needs a discriminator head")
    
    @classmethod
    def for_config(
        cls,
        config: RunConfig,
        demo_set: DemonstrationSet,
        factory: NetworkFactory,
        rng: np.random.Generator,
    ) -> "StyleRewardService":
        """Build the pathway a run config selects; rng seeds the discriminator weights"""
        style = config.style
        head = None
        if config.style_mode == StyleModeEnum.Adversarial:
            network = factory.build_discriminator(demo_set.feature_dim, style.disc_hidden, rng)
            optimizer = AdamState(network.params.arrays(), style.disc_learning_rate, name="discriminator")
            head = DiscriminatorHead(network, optimizer, style.w_gp)
        spec = TrackingRewardSpec(style.tracking_weights) if style.tracking_weights else None
        return cls(config.style_mode, demo_set, spec, head, style.symmetry, style.disc_batch_size)
    
    @property
    def group(self):
        return self.demo_set.group if self.symmetry else []
    
    @property
    def adversarial(self) -> bool:
        return self.mode == StyleModeEnum.Adversarial
    
    def rewards(self, features: np.ndarray, next_features: np.ndarray, phase_steps: np.ndarray) -> np.ndarray:
        """
        Style reward per transition.
        
        Args:
            features: [N x d] features before the step
            next_features: [N x d] features after the step
            phase_steps: [N] episode step counter of the resulting state
        """
        if self.adversarial:
            return symmetric_style_reward(self.head, features, next_features, self.group)
        demo = self.demo_set.primary
        reference = demo.features[np.minimum(phase_steps, demo.length - 1)]
        return tracking_reward(self.tracking_spec, next_features, reference)
    
    def train_discriminator(self, policy_pairs: np.ndarray, rng: np.random.Generator) -> Optional[DiscriminatorLosses]:
        """
        One discriminator update on a fresh 50/50 batch; None in tracking mode.
        
        Args:
            policy_pairs: [M x 2d] pairs from the current rollout
            rng: Demo/policy sampling stream
        """
        if not self.adversarial:
            return None
        half = max(1, self.disc_batch_size // 2)
        demo_batch = self.demo_set.sample_pairs(rng, half)
        policy_batch = policy_pairs[rng.integers(0, policy_pairs.shape[0], size=half)]
        if self.symmetry:
            demo_batch = self._augment(demo_batch)
            policy_batch = self._augment(policy_batch)
        return self.head.update(demo_batch, policy_batch)
    
    def pull_events(self) -> List[DomainEvent]:
        return self.head.pull_all_events() if self.head is not None else []
    
    def _augment(self, pairs: np.ndarray) -> np.ndarray:
        return np.concatenate([pairs, *[op.pairs(pairs) for op in self.demo_set.group]], axis=0)
