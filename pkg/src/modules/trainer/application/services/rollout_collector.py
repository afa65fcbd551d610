"""Rollout collection across parallel environments"""

from typing import List

import numpy as np

from core.application.base_service import BaseService
from modules.envs.application.services import VectorEnv
from modules.style.application.services import StyleRewardService
from ...domain.entities import Agent, RolloutBuffer, Transition
from ..dto import RolloutStats


class RolloutCollector(BaseService):
    """
    Fills a rollout buffer from persistent environment instances.
    Style returns are accumulated per instance across rollouts, like task returns.
    """
    
    def __init__(self, num_envs: int):
        super().__init__()
        self._style_returns = np.zeros(num_envs)
    
    def collect(
        self,
        agent: Agent,
        envs: VectorEnv,
        style: StyleRewardService,
        buffer: RolloutBuffer,
        rng: np.random.Generator,
    ) -> RolloutStats:
        """
        Args:
            rng: Action-sampling stream
            
        Returns:
            Completed-episode returns per reward group
        """
        buffer.reset()
        task_returns: List[float] = []
        style_returns: List[float] = []
        
        while not buffer.full:
            obs = envs.observations()
            actions, log_probs = agent.policy.sample(obs, rng)
            task_values, style_values = agent.values(obs)
            step = envs.step(actions)
            style_rewards = style.rewards(step.features, step.next_features, step.phase_steps)
            buffer.add(Transition(
                obs=step.obs,
                action=actions,
                log_prob=log_probs,
                next_obs=step.next_obs,
                task_reward=step.rewards,
                style_reward=style_rewards,
                terminated=step.terminated,
                truncated=step.truncated,
                task_value=task_values,
                style_value=style_values,
                features=step.features,
                next_features=step.next_features,
            ))
            
            self._style_returns += style_rewards
            task_returns.extend(step.completed_returns)
            for i in np.flatnonzero(step.dones):
                style_returns.append(float(self._style_returns[i]))
                self._style_returns[i] = 0.0
        
        # Bootstrap values for every successor state, terminal ones included.
        next_obs = buffer.flat(buffer.next_obs)
        next_task, next_style = agent.values(next_obs)
        buffer.next_task_values[...] = next_task.reshape(buffer.task_rewards.shape)
        buffer.next_style_values[...] = next_style.reshape(buffer.style_rewards.shape)
        
        return RolloutStats(
            transitions=buffer.capacity,
            task_episode_returns=task_returns,
            style_episode_returns=style_returns,
            mean_task_reward=float(buffer.task_rewards.mean()),
            mean_style_reward=float(buffer.style_rewards.mean()),
        )
