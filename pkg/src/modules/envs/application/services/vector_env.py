"""Parallel environment instances with auto-reset"""

from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np

from core.exceptions.base_exceptions import BaseException as AppBaseException
from ...domain.entities import Environment
from ...domain.exceptions import RejectedActionException


@dataclass
class VectorStep:
    """
    Batched step outcome. next_obs / next_features describe the state the
    action led to, including the final state of an episode that was just reset.
    """
    obs: np.ndarray
    features: np.ndarray
    next_obs: np.ndarray
    next_features: np.ndarray
    rewards: np.ndarray
    terminated: np.ndarray
    truncated: np.ndarray
    phase_steps: np.ndarray
    completed_returns: List[float] = field(default_factory=list)
    completed_env_indices: List[int] = field(default_factory=list)
    
    @property
    def dones(self) -> np.ndarray:
        return self.terminated | self.truncated


class VectorEnv:
    """
    num_envs copies of one environment, each owning a random stream.
    State persists across rollouts; an instance resets as soon as its episode ends.
    """
    
    def __init__(self, env: Environment, rngs: Sequence[np.random.Generator]):
        self.env = env
        self.rngs = list(rngs)
        self.states = [env.reset(rng) for rng in self.rngs]
        self.episode_returns = np.zeros(len(self.rngs))
    
    @property
    def num_envs(self) -> int:
        return len(self.rngs)
    
    def observations(self) -> np.ndarray:
        return np.stack([s.observation() for s in self.states])
    
    def features(self) -> np.ndarray:
        return np.stack([s.features() for s in self.states])
    
    def step(self, actions: np.ndarray) -> VectorStep:
        """
        Step every instance once.
        
        Raises:
            RejectedActionException: With the failing env index
        """
        obs, features = self.observations(), self.features()
        next_obs = np.empty_like(obs)
        next_features = np.empty_like(features)
        rewards = np.empty(self.num_envs)
        terminated = np.zeros(self.num_envs, dtype=bool)
        truncated = np.zeros(self.num_envs, dtype=bool)
        phase_steps = np.empty(self.num_envs, dtype=np.int64)
        completed, completed_idx = [], []
        
        for i, (state, action) in enumerate(zip(self.states, actions)):
            try:
                result = self.env.step(state, action)
            except RejectedActionException:
                raise RejectedActionException(self.env.env_id.value, env_index=i)
            except AppBaseException as e:
                e.details["env_index"] = i
                raise
            next_obs[i] = result.state.observation()
            next_features[i] = result.features
            rewards[i] = result.reward
            terminated[i] = result.terminated
            truncated[i] = result.truncated
            phase_steps[i] = result.state.step
            self.episode_returns[i] += result.reward
            if result.done:
                completed.append(float(self.episode_returns[i]))
                completed_idx.append(i)
                self.episode_returns[i] = 0.0
                self.states[i] = self.env.reset(self.rngs[i])
            else:
                self.states[i] = result.state
        
        return VectorStep(
            obs, features, next_obs, next_features, rewards,
            terminated, truncated, phase_steps, completed, completed_idx,
        )
