"""Test the least-squares discriminator"""

import numpy as np
import pytest

from core.exceptions import DimensionMismatchException, DomainException
from modules.style.domain import DiscriminatorHead
from modules.style.domain.events import DiscriminatorDivergedEvent
from modules.tensor_nn.application.services import NetworkFactory
from modules.tensor_nn.domain.entities import AdamState


def build_head(rng, feature_dim=2, hidden=(16, 16), learning_rate=1e-4, w_gp=10.0):
    network = NetworkFactory().build_discriminator(feature_dim, list(hidden), rng)
    return DiscriminatorHead(network, AdamState(network.params.arrays(), learning_rate), w_gp)


class TestDiscriminatorHead:
    """Test DiscriminatorHead losses and updates"""
    
    def test_constant_zero_losses(self, rng):
        """Test a zero-output network has demo 1, policy 1 and no penalty"""
        # Arrange
        head = build_head(rng)
        head.network.params.layers[-1].weight[:] = 0.0
        demo = rng.normal(size=(8, 4))
        policy = rng.normal(size=(8, 4))
        
        # Act
        losses = head.losses(demo, policy)
        
        # Assert
        assert losses.demo_term == pytest.approx(1.0)
        assert losses.policy_term == pytest.approx(1.0)
        assert losses.gp_term == pytest.approx(0.0)
        assert losses.total == pytest.approx(2.0)
    
    def test_update_reports_pre_step_losses(self, rng):
        """Test update returns the same numbers as losses() before the step"""
        head = build_head(rng)
        demo, policy = rng.normal(size=(8, 4)), rng.normal(size=(8, 4))
        before = head.losses(demo, policy)
        
        after = head.update(demo, policy)
        
        assert after.demo_term == pytest.approx(before.demo_term)
        assert after.gp_term == pytest.approx(before.gp_term)
        assert after.applied
        assert head.version == 1
    
    def test_update_gradient_matches_finite_differences(self, rng):
        """Test the combined loss gradient through a plain gradient step"""
        # Arrange
        network = NetworkFactory().build_discriminator(2, [6], rng)
        
        class Recorder(AdamState):
            def step(self, params, grads):
                self.grads = [g.copy() for g in grads]
                return True
        
        optimizer = Recorder(network.params.arrays(), 1e-3)
        head = DiscriminatorHead(network, optimizer, w_gp=2.0)
        demo, policy = rng.normal(size=(5, 4)), rng.normal(size=(7, 4))
        
        # Act
        head.update(demo, policy)
        
        # Assert
        eps = 1e-6
        for array, grad in zip(network.params.arrays(), optimizer.grads):
            index = (0,) * array.ndim
            original = array[index]
            array[index] = original + eps
            plus = head.losses(demo, policy).total
            array[index] = original - eps
            minus = head.losses(demo, policy).total
            array[index] = original
            assert grad[index] == pytest.approx((plus - minus) / (2 * eps), rel=1e-4, abs=1e-6)
    
    def test_separates_distinct_clusters(self, rng):
        """Test 500 updates push mean demo scores above 0.8 and policy scores below -0.8"""
        # Arrange
        head = build_head(rng, learning_rate=1e-2, w_gp=0.1)
        demo = 1.0 + 0.1 * rng.normal(size=(64, 4))
        policy = -1.0 + 0.1 * rng.normal(size=(64, 4))
        first = head.losses(demo, policy)
        
        # Act
        for _ in range(500):
            head.update(demo, policy)
        
        # Assert
        assert np.mean(head.score(demo)) > 0.8
        assert np.mean(head.score(policy)) < -0.8
        assert head.losses(demo, policy).total < first.total
    
    @pytest.mark.parametrize("w_gp", [0.0, 10.0])
    def test_penalty_shrinks_only_when_weighted(self, w_gp):
        """Test gp_term stays zero without a weight and falls across updates with one"""
        # Arrange
        rng = np.random.default_rng(3)
        head = build_head(rng, learning_rate=1e-3, w_gp=w_gp)
        demo, policy = rng.normal(size=(32, 4)), rng.normal(size=(32, 4))
        
        # Act
        trace = [head.update(demo, policy).gp_term for _ in range(200)]
        
        # Assert
        if w_gp == 0.0:
            assert trace == [0.0] * 200
        else:
            assert trace[-1] < trace[0]
    
    def test_non_finite_loss_skips_update(self, rng):
        """Test a divergent loss records an event and leaves weights unchanged"""
        # Arrange
        head = build_head(rng)
        head.network.params.layers[-1].weight[:] = 1e200
        weights = [a.copy() for a in head.network.params.arrays()]
        
        # Act
        losses = head.update(rng.normal(size=(4, 4)), rng.normal(size=(4, 4)))
        
        # Assert
        assert not losses.applied
        assert any(isinstance(e, DiscriminatorDivergedEvent) for e in head.pull_all_events())
        for before, after in zip(weights, head.network.params.arrays()):
            np.testing.assert_array_equal(before, after)
    
    def test_batch_width_checked(self, rng):
        """Test pair widths must match the network"""
        head = build_head(rng)
        
        with pytest.raises(DimensionMismatchException):
            head.losses(np.zeros((2, 3)), np.zeros((2, 4)))
        with pytest.raises(DomainException):
            head.losses(np.zeros((0, 4)), np.zeros((2, 4)))
    
    def test_negative_penalty_weight(self, rng):
        """Test w_gp must be non-negative"""
        with pytest.raises(DomainException):
            build_head(rng, w_gp=-1.0)
