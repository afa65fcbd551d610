"""Adam optimizer state"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from core.domain.base_aggregate import AggregateRoot
from core.exceptions import DimensionMismatchException
from ..events.nn_events import GradientOverflowEvent
from ..services.gradients import all_finite


class AdamState(AggregateRoot):
    """
    First/second moment estimates for a list of parameter arrays.
    
    A step whose gradients contain NaN or infinity leaves parameters, moments
    and step counter untouched and records a GradientOverflowEvent.
    """
    
    def __init__(
        self,
        params: Sequence[np.ndarray],
        learning_rate: float,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
        name: str = "adam",
    ):
        super().__init__()
        self.name = name
        self.learning_rate = float(learning_rate)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.epsilon = float(epsilon)
        self.m: List[np.ndarray] = [np.zeros_like(p) for p in params]
        self.v: List[np.ndarray] = [np.zeros_like(p) for p in params]
        self.step_count = 0
        self.skipped_steps = 0
    
    def step(self, params: Sequence[np.ndarray], grads: Sequence[np.ndarray]) -> bool:
        """
        Apply one bias-corrected Adam update in place.
        
        Args:
            params: Live parameter arrays (mutated)
            grads: Gradients of the loss to minimize, same shapes
            
        Returns:
            True if applied, False if skipped for non-finite gradients
        """
        if len(params) != len(self.m) or len(grads) != len(self.m):
            raise DimensionMismatchException(
                f"{self.name} parameter count", len(self.m), (len(params), len(grads))
            )
        for index, (p, g, m) in enumerate(zip(params, grads, self.m)):
            if p.shape != m.shape or np.shape(g) != m.shape:
                raise DimensionMismatchException(
                    f"{self.name} array {index}", m.shape, (p.shape, np.shape(g))
                )
        
        if not all_finite(grads):
            self.skipped_steps += 1
            self.add_domain_event(GradientOverflowEvent(self.name, self.step_count))
            return False
        
        self.step_count += 1
        correction1 = 1.0 - self.beta1 ** self.step_count
        correction2 = 1.0 - self.beta2 ** self.step_count
        for p, g, m, v in zip(params, grads, self.m, self.v):
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * g * g
            p -= self.learning_rate * (m / correction1) / (np.sqrt(v / correction2) + self.epsilon)
        self.increment_version()
        return True
    
    def named_arrays(self, prefix: str) -> Dict[str, np.ndarray]:
        named = {f"{prefix}.step": np.array(self.step_count, dtype=np.int64)}
        for index, (m, v) in enumerate(zip(self.m, self.v)):
            named[f"{prefix}.{index}.m"] = m
            named[f"{prefix}.{index}.v"] = v
        return named
    
    def restore(self, prefix: str, arrays: Dict[str, np.ndarray]) -> None:
        """Load moments and step counter written by named_arrays"""
        for index in range(len(self.m)):
            m = np.asarray(arrays[f"{prefix}.{index}.m"], dtype=np.float64)
            v = np.asarray(arrays[f"{prefix}.{index}.v"], dtype=np.float64)
            if m.shape != self.m[index].shape:
                raise DimensionMismatchException(f"{prefix}.{index}.m", self.m[index].shape, m.shape)
            self.m[index] = m.copy()
            self.v[index] = v.copy()
        self.step_count = int(arrays[f"{prefix}.step"])


def adam_step(state: AdamState, params: Sequence[np.ndarray], grads: Sequence[np.ndarray]) -> bool:
    return state.step(params, grads)
