"""Test the rollout buffer"""

import numpy as np
import pytest

from core.exceptions import DimensionMismatchException
from core.exceptions.base_exceptions import StateException
from modules.trainer.domain.entities import RolloutBuffer, Transition


def make_transition(num_envs: int, step: int) -> Transition:
    fill = lambda *shape: np.full((num_envs, *shape), float(step))
    return Transition(
        obs=fill(3), action=fill(1), log_prob=fill(), next_obs=fill(3),
        task_reward=fill(), style_reward=fill(),
        terminated=np.zeros(num_envs, dtype=bool), truncated=np.zeros(num_envs, dtype=bool),
        task_value=fill(), style_value=fill(), features=fill(2), next_features=fill(2) + 1,
    )


class TestRolloutBuffer:
    """Test RolloutBuffer"""
    
    @pytest.fixture
    def buffer(self):
        buffer = RolloutBuffer(num_envs=2, steps_per_env=4, obs_dim=3, action_dim=1, feature_dim=2)
        for step in range(4):
            buffer.add(make_transition(2, step))
        return buffer
    
    def test_fills_to_capacity(self, buffer):
        """Test the buffer is full after steps_per_env adds"""
        assert buffer.full
        assert buffer.capacity == 8
        
        with pytest.raises(StateException):
            buffer.add(make_transition(2, 9))
    
    def test_flat_is_step_major(self, buffer):
        """Test flattening keeps environments adjacent within a step"""
        np.testing.assert_array_equal(buffer.flat(buffer.task_rewards), [0, 0, 1, 1, 2, 2, 3, 3])
    
    def test_style_pairs(self, buffer):
        """Test (features, next features) rows"""
        pairs = buffer.style_pairs()
        
        assert pairs.shape == (8, 4)
        np.testing.assert_array_equal(pairs[2], [1, 1, 2, 2])
    
    def test_minibatches_require_advantages(self, buffer, rng):
        """Test minibatches are refused before advantages are computed"""
        with pytest.raises(StateException):
            buffer.minibatch_indices(rng, 2)
    
    def test_minibatches_partition_buffer(self, buffer, rng):
        """Test every transition appears exactly once per partition"""
        # Arrange
        buffer.advantages_ready = True
        
        # Act
        parts = list(buffer.minibatch_indices(rng, 4))
        
        # Assert
        assert [len(p) for p in parts] == [2, 2, 2, 2]
        np.testing.assert_array_equal(np.sort(np.concatenate(parts)), np.arange(8))
    
    def test_reset_clears_readiness(self, buffer, rng):
        """Test reset empties the buffer for the next rollout"""
        buffer.advantages_ready = True
        
        buffer.reset()
        
        assert not buffer.full
        with pytest.raises(StateException):
            buffer.minibatch_indices(rng, 2)
    
    def test_shape_mismatch(self):
        """Test a transition for a different env count is rejected"""
        buffer = RolloutBuffer(2, 4, 3, 1, 2)
        
        with pytest.raises(DimensionMismatchException):
            buffer.add(make_transition(3, 0))
