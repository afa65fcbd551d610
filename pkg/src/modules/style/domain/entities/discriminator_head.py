"""Least-squares discriminator over transition feature pairs"""

from typing import List

import numpy as np

from core.domain.base_aggregate import AggregateRoot
from core.domain.events import DomainEvent
from core.exceptions import DimensionMismatchException, DomainException
from modules.tensor_nn.domain.entities import AdamState, MultilayerPerceptron
from ..events.style_events import DiscriminatorDivergedEvent
from ..value_objects.discriminator_losses import DiscriminatorLosses


class DiscriminatorHead(AggregateRoot):
    """
    Scores concatenated (features, next features); trained towards +1 on
    demonstration pairs and -1 on policy pairs with an input-gradient penalty
    on the demonstration side.
    """
    
    def __init__(self, network: MultilayerPerceptron, optimizer: AdamState, w_gp: float = 10.0):
        super().__init__()
        if network.out_dim != 1 or network.in_dim % 2:
            raise DimensionMismatchException("discriminator layout", "2d -> 1", (network.in_dim, network.out_dim))
        if w_gp < 0:
            raise DomainException("Gradient penalty weight must be >= 0", {"w_gp": w_gp})
        self.network = network
        self.optimizer = optimizer
        self.w_gp = float(w_gp)
    
    @property
    def feature_dim(self) -> int:
        return self.network.in_dim // 2
    
    def score(self, pairs) -> np.ndarray:
        """Unbounded score D per pair"""
        return self.network.forward(pairs)[..., 0]
    
    def losses(self, demo_pairs: np.ndarray, policy_pairs: np.ndarray) -> DiscriminatorLosses:
        """Loss components without updating"""
        self._check(demo_pairs, policy_pairs)
        penalties, _ = self.network.input_gradient_penalty(demo_pairs)
        demo_scores = self.score(demo_pairs)
        policy_scores = self.score(policy_pairs)
        return DiscriminatorLosses(
            float(np.mean((demo_scores - 1.0) ** 2)),
            float(np.mean((policy_scores + 1.0) ** 2)),
            self.w_gp * float(np.mean(penalties)),
        )
    
    def update(self, demo_pairs: np.ndarray, policy_pairs: np.ndarray) -> DiscriminatorLosses:
        """
        One optimizer step on
        E_demo[(D - 1)^2] + E_policy[(D + 1)^2] + (w_gp / 2) E_demo[|grad_x D|^2].
        
        Returns:
            Loss components measured before the step
        """
        self._check(demo_pairs, policy_pairs)
        n_demo, n_policy = demo_pairs.shape[0], policy_pairs.shape[0]
        
        penalties, penalty_grads = self.network.input_gradient_penalty(demo_pairs)
        gp_term = self.w_gp * float(np.mean(penalties))
        grads = penalty_grads.scaled(self.w_gp / n_demo)
        
        demo_scores = self.score(demo_pairs)
        grads = grads + self.network.backward((2.0 * (demo_scores - 1.0) / n_demo)[:, None])
        policy_scores = self.score(policy_pairs)
        grads = grads + self.network.backward((2.0 * (policy_scores + 1.0) / n_policy)[:, None])
        
        demo_term = float(np.mean((demo_scores - 1.0) ** 2))
        policy_term = float(np.mean((policy_scores + 1.0) ** 2))
        if not np.isfinite(demo_term + policy_term + gp_term):
            self.add_domain_event(DiscriminatorDivergedEvent(demo_term, policy_term, gp_term))
            return DiscriminatorLosses(demo_term, policy_term, gp_term, applied=False)
        
        applied = self.optimizer.step(self.network.params.arrays(), grads.arrays())
        if applied:
            self.increment_version()
        return DiscriminatorLosses(demo_term, policy_term, gp_term, applied=applied)
    
    def pull_all_events(self) -> List[DomainEvent]:
        """Own events followed by the optimizer's"""
        return [*self.pull_domain_events(), *self.optimizer.pull_domain_events()]
    
    def _check(self, demo_pairs: np.ndarray, policy_pairs: np.ndarray) -> None:
        for what, batch in (("demo pairs", demo_pairs), ("policy pairs", policy_pairs)):
            if batch.ndim != 2 or batch.shape[0] == 0:
                raise DomainException(f"Discriminator {what} must be a nonempty 2-D batch", {"shape": list(batch.shape)})
            if batch.shape[1] != self.network.in_dim:
                raise DimensionMismatchException(f"discriminator {what}", self.network.in_dim, batch.shape[1])
