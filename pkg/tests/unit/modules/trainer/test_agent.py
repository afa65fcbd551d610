"""Test the agent aggregate"""

import numpy as np
import pytest

from modules.tensor_nn.application.services import NetworkFactory
from modules.trainer.domain.entities import Agent
from modules.trainer.domain.exceptions import CheckpointMismatchException


def build_agent(seed: int, hidden=(8,)) -> Agent:
    rng = np.random.default_rng(seed)
    factory = NetworkFactory()
    return Agent(
        factory.build_policy(8, 2, list(hidden), rng),
        factory.build_critic(8, list(hidden), rng, "critic_task"),
        factory.build_critic(8, list(hidden), rng, "critic_style"),
        learning_rate=1e-3,
    )


class TestAgent:
    """Test Agent"""
    
    def test_values_per_group(self, rng):
        """Test one value per observation from each critic"""
        task, style = build_agent(0).values(rng.normal(size=(5, 8)))
        
        assert task.shape == (5,) and style.shape == (5,)
        assert not np.allclose(task, style)
    
    def test_restore_copies_everything(self, rng):
        """Test a restored agent acts and values like the source"""
        # Arrange
        source, target = build_agent(0), build_agent(1)
        obs = rng.normal(size=(4, 8))
        
        # Act
        target.restore(source.named_arrays())
        
        # Assert
        np.testing.assert_array_equal(target.policy.mean(obs), source.policy.mean(obs))
        np.testing.assert_array_equal(target.values(obs)[0], source.values(obs)[0])
        np.testing.assert_array_equal(target.values(obs)[1], source.values(obs)[1])
        assert target.named_arrays().keys() == source.named_arrays().keys()
    
    def test_restore_is_in_place(self):
        """Test optimizers keep referencing the live parameter arrays"""
        target = build_agent(1)
        weight = target.critic_task.params.arrays()[0]
        
        target.restore(build_agent(0).named_arrays())
        
        assert target.critic_task.params.arrays()[0] is weight
    
    def test_size_mismatch(self):
        """Test arrays of differently sized networks are rejected"""
        with pytest.raises(CheckpointMismatchException):
            build_agent(1, hidden=(8,)).restore(build_agent(0, hidden=(4,)).named_arrays())
    
    def test_missing_arrays(self):
        """Test an incomplete checkpoint is rejected"""
        arrays = build_agent(0).named_arrays()
        del arrays["critic_style.0.weight"]
        
        with pytest.raises(CheckpointMismatchException):
            build_agent(1).restore(arrays)
