"""Generalized advantage estimation"""

from typing import Tuple

import numpy as np


def compute_gae(
    rewards: np.ndarray,
    values: np.ndarray,
    next_values: np.ndarray,
    terminated: np.ndarray,
    dones: np.ndarray,
    gamma: float,
    gae_lambda: float,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    GAE over [steps x envs] arrays.
    
    next_values holds V(s_{t+1}) for every step, including the final state of a
    truncated episode, so truncation bootstraps and termination zeroes.
    The recursion restarts after any episode end.
    
    Returns:
        (advantages, value targets = advantages + values)
    """
    rewards = np.asarray(rewards, dtype=np.float64)
    not_terminated = 1.0 - np.asarray(terminated, dtype=np.float64)
    continues = 1.0 - np.asarray(dones, dtype=np.float64)
    deltas = rewards + gamma * not_terminated * next_values - values
    
    advantages = np.zeros_like(rewards)
    running = np.zeros(rewards.shape[1:])
    for t in reversed(range(rewards.shape[0])):
        running = deltas[t] + gamma * gae_lambda * continues[t] * running
        advantages[t] = running
    return advantages, advantages + values
