"""Actor with separate task and style critics"""

from typing import Dict, List

import numpy as np

from core.domain.base_aggregate import AggregateRoot
from core.domain.events import DomainEvent
from modules.tensor_nn.domain.entities import AdamState, GaussianPolicy, MlpParams, MultilayerPerceptron
from ..exceptions.trainer_exceptions import CheckpointMismatchException


class Agent(AggregateRoot):
    """
    Policy and one value network per reward group, each with its own optimizer.
    The task critic only ever sees task targets and the style critic style targets.
    """
    
    def __init__(
        self,
        policy: GaussianPolicy,
        critic_task: MultilayerPerceptron,
        critic_style: MultilayerPerceptron,
        learning_rate: float,
    ):
        super().__init__()
        self.policy = policy
        self.critic_task = critic_task
        self.critic_style = critic_style
        self.policy_optimizer = AdamState(policy.arrays(), learning_rate, name="policy")
        self.task_optimizer = AdamState(critic_task.params.arrays(), learning_rate, name="critic_task")
        self.style_optimizer = AdamState(critic_style.params.arrays(), learning_rate, name="critic_style")
    
    @property
    def optimizers(self) -> Dict[str, AdamState]:
        return {
            "policy": self.policy_optimizer,
            "critic_task": self.task_optimizer,
            "critic_style": self.style_optimizer,
        }
    
    def values(self, obs: np.ndarray) -> tuple:
        """(task values, style values) for a batch"""
        return self.critic_task.forward(obs)[:, 0], self.critic_style.forward(obs)[:, 0]
    
    def pull_all_events(self) -> List[DomainEvent]:
        events = self.pull_domain_events()
        for optimizer in self.optimizers.values():
            events.extend(optimizer.pull_domain_events())
        return events
    
    def named_arrays(self) -> Dict[str, np.ndarray]:
        named = {
            **self.policy.mean_network.params.named_arrays("policy.mean"),
            "policy.log_std": self.policy.log_std,
            **self.critic_task.params.named_arrays("critic_task"),
            **self.critic_style.params.named_arrays("critic_style"),
        }
        for name, optimizer in self.optimizers.items():
            named.update(optimizer.named_arrays(f"adam.{name}"))
        return named
    
    def restore(self, arrays: Dict[str, np.ndarray], with_optimizers: bool = True) -> None:
        """
        Copy parameters (and optimizer moments) into the live arrays.
        
        Raises:
            CheckpointMismatchException: Shapes differ from this agent's networks
        """
        restore_params(self.policy.mean_network.params, "policy.mean", arrays)
        log_std = np.asarray(arrays["policy.log_std"], dtype=np.float64)
        if log_std.shape != self.policy.log_std.shape:
            raise CheckpointMismatchException(
                "policy.log_std shape", expected=self.policy.log_std.shape, actual=log_std.shape
            )
        self.policy.log_std[...] = log_std
        restore_params(self.critic_task.params, "critic_task", arrays)
        restore_params(self.critic_style.params, "critic_style", arrays)
        if with_optimizers:
            for name, optimizer in self.optimizers.items():
                optimizer.restore(f"adam.{name}", arrays)


def restore_params(params: MlpParams, prefix: str, arrays: Dict[str, np.ndarray]) -> None:
    if f"{prefix}.0.weight" not in arrays:
        raise CheckpointMismatchException(f"missing {prefix} arrays")
    stored = MlpParams.from_named_arrays(prefix, arrays)
    if stored.sizes != params.sizes:
        raise CheckpointMismatchException(f"{prefix} layer sizes", expected=params.sizes, actual=stored.sizes)
    for live, loaded in zip(params.arrays(), stored.arrays()):
        live[...] = loaded
