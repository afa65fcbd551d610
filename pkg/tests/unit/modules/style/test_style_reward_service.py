"""Test the style reward pathway"""

import numpy as np
import pytest

from core.domain.enums import StyleModeEnum
from core.exceptions import DomainException
from modules.demos.domain.entities import DemonstrationSet, DemoTrajectory
from modules.demos.domain.services import generate_gait_demo
from modules.envs.domain import MIRROR
from modules.style.application.services import StyleRewardService
from modules.tensor_nn.application.services import NetworkFactory


class TestStyleRewardServiceTracking:
    """Test tracking mode"""
    
    @pytest.fixture
    def service(self):
        demo = DemoTrajectory([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]], period=0.05)
        return StyleRewardService(StyleModeEnum.Tracking, DemonstrationSet([demo]))
    
    def test_reward_reads_demo_at_phase(self, service):
        """Test step t is compared with demo row min(t, T - 1)"""
        next_features = np.array([[1.0, 0.0], [2.0, 0.0], [1.0, 0.0]])
        
        rewards = service.rewards(np.zeros((3, 2)), next_features, np.array([1, 7, 2]))
        
        np.testing.assert_allclose(rewards, [1.0, 1.0, np.exp(-10.0)])
    
    def test_no_discriminator_training(self, service, rng):
        """Test tracking mode has nothing to train"""
        assert service.train_discriminator(np.zeros((4, 4)), rng) is None
        assert service.pull_events() == []


class TestStyleRewardServiceAdversarial:
    """Test adversarial mode"""
    
    @pytest.fixture
    def demo_set(self):
        return DemonstrationSet([generate_gait_demo()], [MIRROR])
    
    def test_requires_head(self, demo_set):
        """Test adversarial mode needs a discriminator"""
        with pytest.raises(DomainException):
            StyleRewardService(StyleModeEnum.Adversarial, demo_set)
    
    def test_for_config_builds_head(self, demo_set, tiny_config, rng):
        """Test the gait config selects the adversarial pathway"""
        service = StyleRewardService.for_config(tiny_config("planar_gait"), demo_set, NetworkFactory(), rng)
        
        assert service.adversarial
        assert service.head.feature_dim == 4
        assert service.group == [MIRROR]
    
    def test_rewards_in_unit_interval(self, demo_set, tiny_config, rng):
        """Test adversarial rewards stay in [0, 1]"""
        service = StyleRewardService.for_config(tiny_config("planar_gait"), demo_set, NetworkFactory(), rng)
        
        rewards = service.rewards(rng.normal(size=(6, 4)), rng.normal(size=(6, 4)), np.arange(6))
        
        assert rewards.shape == (6,)
        assert np.all((rewards >= 0) & (rewards <= 1))
    
    def test_train_discriminator_steps(self, demo_set, tiny_config, rng):
        """Test one update per call"""
        service = StyleRewardService.for_config(tiny_config("planar_gait"), demo_set, NetworkFactory(), rng)
        
        losses = service.train_discriminator(rng.normal(size=(10, 8)), rng)
        
        assert losses.applied
        assert service.head.version == 1
    
    def test_symmetry_off_has_empty_group(self, demo_set, tiny_config, rng):
        """Test disabling symmetry drops the group"""
        config = tiny_config("planar_gait", **{"style.symmetry": False})
        
        service = StyleRewardService.for_config(config, demo_set, NetworkFactory(), rng)
        
        assert service.group == []
