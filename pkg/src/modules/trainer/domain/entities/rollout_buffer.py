"""Fixed-horizon rollout storage"""

from dataclasses import dataclass
from typing import Iterator, List

import numpy as np

from core.exceptions import DimensionMismatchException
from core.exceptions.base_exceptions import StateException


@dataclass
class Transition:
    """One vectorized environment step: every field has a leading num_envs axis"""
    obs: np.ndarray
    action: np.ndarray
    log_prob: np.ndarray
    next_obs: np.ndarray
    task_reward: np.ndarray
    style_reward: np.ndarray
    terminated: np.ndarray
    truncated: np.ndarray
    task_value: np.ndarray
    style_value: np.ndarray
    features: np.ndarray
    next_features: np.ndarray


class RolloutBuffer:
    """
    Arrays shaped [steps_per_env x num_envs x ...]; capacity is exactly
    steps_per_env * num_envs. Advantages must be set before minibatches are drawn.
    """

    def __init__(self, num_envs: int, steps_per_env: int, obs_dim: int, action_dim: int, feature_dim: int):
        self.num_envs = int(num_envs)
        self.steps_per_env = int(steps_per_env)
        shape = (self.steps_per_env, self.num_envs)
        self.obs = np.zeros((*shape, obs_dim))
        self.actions = np.zeros((*shape, action_dim))
        self.log_probs = np.zeros(shape)
        self.next_obs = np.zeros((*shape, obs_dim))
        self.task_rewards = np.zeros(shape)
        self.style_rewards = np.zeros(shape)
        self.terminated = np.zeros(shape, dtype=bool)
        self.truncated = np.zeros(shape, dtype=bool)
        self.task_values = np.zeros(shape)
        self.style_values = np.zeros(shape)
        self.next_task_values = np.zeros(shape)
        self.next_style_values = np.zeros(shape)
        self.features = np.zeros((*shape, feature_dim))
        self.next_features = np.zeros((*shape, feature_dim))
        self.task_advantages = np.zeros(shape)
        self.task_targets = np.zeros(shape)
        self.style_advantages = np.zeros(shape)
        self.style_targets = np.zeros(shape)
        self.size = 0
        self.advantages_ready = False

    @property
    def capacity(self) -> int:
        return self.steps_per_env * self.num_envs

    @property
    def full(self) -> bool:
        return self.size == self.steps_per_env

    @property
    def dones(self) -> np.ndarray:
        return self.terminated | self.truncated

    def reset(self) -> None:
        self.size = 0
        self.advantages_ready = False

    def add(self, transition: Transition) -> None:
        if self.full:
            raise StateException("Rollout buffer is full", {"capacity": self.capacity})
        if transition.obs.shape != self.obs.shape[1:]:
            raise DimensionMismatchException("transition obs", self.obs.shape[1:], transition.obs.shape)
        t = self.size
        self.obs[t] = transition.obs
        self.actions[t] = transition.action
        self.log_probs[t] = transition.log_prob
        self.next_obs[t] = transition.next_obs
        self.task_rewards[t] = transition.task_reward
        self.style_rewards[t] = transition.style_reward
        self.terminated[t] = transition.terminated
        self.truncated[t] = transition.truncated
        self.task_values[t] = transition.task_value
        self.style_values[t] = transition.style_value
        self.features[t] = transition.features
        self.next_features[t] = transition.next_features
        self.size += 1

    def flat(self, array: np.ndarray) -> np.ndarray:
        """[steps x envs x ...] -> [capacity x ...]"""
        return array.reshape(self.capacity, *array.shape[2:])

    def style_pairs(self) -> np.ndarray:
        """[capacity x 2d] (features, next features) of every stored transition"""
        return np.concatenate([self.flat(self.features), self.flat(self.next_features)], axis=1)

    def minibatch_indices(self, rng: np.random.Generator, minibatches: int) -> Iterator[np.ndarray]:
        """
        One shuffled partition of the buffer into equal minibatches.

        Raises:
            StateException: Advantages not computed or buffer not full
        """
        if not (self.full and self.advantages_ready):
            raise StateException("Minibatches requested before the buffer was full and advantages computed")
        permutation = rng.permutation(self.capacity)
        parts: List[np.ndarray] = np.split(permutation, minibatches)
        return iter(parts)
