"""PPO policy and critic updates"""

from typing import Callable, Optional

import numpy as np

from core.application.base_service import BaseService
from config.run_config import TrainSection
from modules.tensor_nn.domain.entities import AdamState, MultilayerPerceptron
from modules.tensor_nn.domain.services import clip_by_global_norm
from ...domain.entities import Agent, RolloutBuffer
from ...domain.exceptions import TrainingDivergedException
from ...domain.services import clipped_surrogate
from ..dto import PpoStats

EpochHook = Callable[[int], None]


class PpoLearner(BaseService):
    """
    K epochs over a shuffled minibatch partition of the buffer.
    Every transition is used exactly once per epoch.
    """

    def __init__(self, settings: TrainSection):
        super().__init__()
        self.settings = settings

    def update(
        self,
        agent: Agent,
        buffer: RolloutBuffer,
        advantages: np.ndarray,
        rng: np.random.Generator,
        on_epoch_end: Optional[EpochHook] = None,
        iteration: int = 0,
    ) -> PpoStats:
        """
        Args:
            advantages: [capacity] fused advantages, flat buffer order
            rng: Minibatch shuffling stream
            on_epoch_end: Called with the epoch index after its minibatches

        Raises:
            TrainingDivergedException: A loss became non-finite
        """
        s = self.settings
        obs = buffer.flat(buffer.obs)
        actions = buffer.flat(buffer.actions)
        old_log_probs = buffer.flat(buffer.log_probs)
        task_targets = buffer.flat(buffer.task_targets)
        style_targets = buffer.flat(buffer.style_targets)

        totals = np.zeros(5)
        updates = 0
        for epoch in range(s.epochs):
            for idx in buffer.minibatch_indices(rng, s.minibatches):
                policy_loss, kl, clip_fraction = self._policy_step(
                    agent, obs[idx], actions[idx], old_log_probs[idx], advantages[idx], iteration
                )
                task_loss = self._critic_step(
                    agent.critic_task, agent.task_optimizer, obs[idx], task_targets[idx], iteration
                )
                style_loss = self._critic_step(
                    agent.critic_style, agent.style_optimizer, obs[idx], style_targets[idx], iteration
                )
                totals += (policy_loss, task_loss, style_loss, kl, clip_fraction)
                updates += 1
            if on_epoch_end is not None:
                on_epoch_end(epoch)

        means = totals / max(updates, 1)
        return PpoStats(
            policy_loss=means[0],
            value_loss_task=means[1],
            value_loss_style=means[2],
            kl=means[3],
            clip_fraction=means[4],
            updates=updates,
        )

    def _policy_step(self, agent, obs, actions, old_log_probs, advantages, iteration):
        s = self.settings
        policy = agent.policy
        log_probs = policy.log_prob(obs, actions)
        ratio = np.exp(log_probs - old_log_probs)
        surrogate, d_surrogate, clipped = clipped_surrogate(ratio, advantages, s.clip_range)
        batch = obs.shape[0]
        loss = -float(np.mean(surrogate)) - s.entropy_coef * policy.entropy()
        if not np.isfinite(loss):
            raise TrainingDivergedException("policy loss", s.seed, iteration, loss)

        # Gradient of the objective to maximize; negate for the optimizer.
        grads = policy.backward(d_surrogate / batch, entropy_weight=s.entropy_coef)
        descent = [-g for g in grads.arrays()]
        if s.max_grad_norm is not None:
            descent, _ = clip_by_global_norm(descent, s.max_grad_norm)
        agent.policy_optimizer.step(policy.arrays(), descent)
        policy.clamp_log_std()
        kl = float(np.mean(old_log_probs - log_probs))
        return loss, kl, float(np.mean(clipped))

    def _critic_step(
        self,
        critic: MultilayerPerceptron,
        optimizer: AdamState,
        obs: np.ndarray,
        targets: np.ndarray,
        iteration: int,
    ) -> float:
        s = self.settings
        values = critic.forward(obs)[:, 0]
        error = values - targets
        loss = s.value_loss_coef * float(np.mean(error * error))
        if not np.isfinite(loss):
            raise TrainingDivergedException(f"{critic.name} value loss", s.seed, iteration, loss)
        grads = critic.backward((s.value_loss_coef * 2.0 * error / obs.shape[0])[:, None]).arrays()
        if s.max_grad_norm is not None:
            grads, _ = clip_by_global_norm(grads, s.max_grad_norm)
        optimizer.step(critic.params.arrays(), grads)
        return loss
