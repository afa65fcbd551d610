"""Test PPO updates"""

import numpy as np
import pytest

from modules.trainer.application.services import PpoLearner
from modules.trainer.domain.entities import RolloutBuffer
from modules.trainer.domain.exceptions import TrainingDivergedException
from .test_agent import build_agent


@pytest.fixture
def train_section(tiny_config):
    return tiny_config(**{"train.learning_rate": 1e-2}).train


@pytest.fixture
def filled_buffer(train_section, rng):
    """Random rollout of the tiny configuration with task targets of 1 and style targets of -1"""
    t = train_section
    buffer = RolloutBuffer(t.num_envs, t.steps_per_env, 8, 2, 4)
    shape = (t.steps_per_env, t.num_envs)
    buffer.obs[...] = rng.normal(size=(*shape, 8))
    buffer.actions[...] = rng.normal(size=(*shape, 2))
    buffer.log_probs[...] = -2.0
    buffer.task_targets[...] = 1.0
    buffer.style_targets[...] = -1.0
    buffer.size = t.steps_per_env
    buffer.advantages_ready = True
    return buffer


class TestPpoLearner:
    """Test PpoLearner.update"""
    
    def test_update_count_and_epoch_hook(self, train_section, filled_buffer, rng):
        """Test K epochs of M minibatches, with the hook after each epoch"""
        # Arrange
        agent = build_agent(0)
        epochs = []
        advantages = rng.normal(size=filled_buffer.capacity)
        
        # Act
        stats = PpoLearner(train_section).update(agent, filled_buffer, advantages, rng, epochs.append)
        
        # Assert
        assert stats.updates == train_section.epochs * train_section.minibatches
        assert epochs == list(range(train_section.epochs))
        assert 0.0 <= stats.clip_fraction <= 1.0
    
    def test_critics_fit_their_own_targets(self, train_section, filled_buffer, rng):
        """Test each critic moves toward its own group's targets"""
        # Arrange
        agent = build_agent(0)
        learner = PpoLearner(train_section)
        advantages = np.zeros(filled_buffer.capacity)
        obs = filled_buffer.flat(filled_buffer.obs)
        before_task = np.mean((agent.values(obs)[0] - 1.0) ** 2)
        before_style = np.mean((agent.values(obs)[1] + 1.0) ** 2)
        
        # Act
        for _ in range(40):
            learner.update(agent, filled_buffer, advantages, rng)
        
        # Assert
        task, style = agent.values(obs)
        assert np.mean((task - 1.0) ** 2) < 0.5 * before_task
        assert np.mean((style + 1.0) ** 2) < 0.5 * before_style
    
    def test_positive_advantages_raise_log_prob(self, tiny_config, filled_buffer, rng):
        """Test a single full-batch step increases the likelihood of advantaged actions"""
        # Arrange
        section = tiny_config(**{
            "train.epochs": 1,
            "train.minibatches": 1,
            "train.entropy_coef": 0.0,
            "train.learning_rate": 1e-3,
        }).train
        agent = build_agent(0)
        obs = filled_buffer.flat(filled_buffer.obs)
        actions = filled_buffer.flat(filled_buffer.actions)
        filled_buffer.log_probs[...] = agent.policy.log_prob(obs, actions).reshape(filled_buffer.log_probs.shape)
        before = agent.policy.log_prob(obs, actions).mean()
        
        # Act
        PpoLearner(section).update(agent, filled_buffer, np.ones(filled_buffer.capacity), rng)
        
        # Assert
        assert agent.policy.log_prob(obs, actions).mean() > before
    
    def test_zero_advantages_leave_entropy_gradient(self, tiny_config, filled_buffer, rng):
        """Test the mean network stays put while the entropy bonus widens the policy"""
        # Arrange
        section = tiny_config(**{"train.epochs": 1, "train.minibatches": 1, "train.entropy_coef": 0.01}).train
        agent = build_agent(0)
        mean_before = [a.copy() for a in agent.policy.mean_network.params.arrays()]
        log_std_before = agent.policy.log_std.copy()
        
        # Act
        PpoLearner(section).update(agent, filled_buffer, np.zeros(filled_buffer.capacity), rng)
        
        # Assert
        for before, after in zip(mean_before, agent.policy.mean_network.params.arrays()):
            np.testing.assert_array_equal(before, after)
        assert np.all(agent.policy.log_std > log_std_before)
    
    def test_style_targets_do_not_reach_task_critic(self, train_section, filled_buffer):
        """Test changing only the style targets leaves the task critic update bit-identical"""
        # Arrange
        learner = PpoLearner(train_section)
        advantages = np.zeros(filled_buffer.capacity)
        first, second = build_agent(0), build_agent(0)
        
        # Act
        learner.update(first, filled_buffer, advantages, np.random.default_rng(0))
        filled_buffer.style_targets[...] = 0.0
        learner.update(second, filled_buffer, advantages, np.random.default_rng(0))
        
        # Assert
        for a, b in zip(first.critic_task.params.arrays(), second.critic_task.params.arrays()):
            np.testing.assert_array_equal(a, b)
        assert any(
            not np.array_equal(a, b)
            for a, b in zip(first.critic_style.params.arrays(), second.critic_style.params.arrays())
        )
    
    def test_nan_advantages_diverge(self, train_section, filled_buffer, rng):
        """Test a non-finite loss stops training"""
        advantages = np.full(filled_buffer.capacity, np.nan)
        
        with pytest.raises(TrainingDivergedException) as exc_info:
            PpoLearner(train_section).update(build_agent(0), filled_buffer, advantages, rng, iteration=7)
        
        assert exc_info.value.details["iteration"] == 7
