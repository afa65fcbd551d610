"""Test the bounded Lagrangian multiplier"""

import numpy as np
import pytest
from scipy.special import expit

from core.exceptions import DomainException
from modules.cmdp.domain import DualAdvantages, LagrangianState
from modules.cmdp.domain.events import ConstraintUpdatedEvent, MultiplierUpdatedEvent, WarmupFinishedEvent
from modules.cmdp.domain.exceptions import MultiplierStateException, WarmupStateException


class TestLagrangianState:
    """Test LagrangianState transitions"""
    
    @pytest.fixture
    def joint_state(self):
        """State past warm-up with v_g_star = 10"""
        state = LagrangianState(alpha=0.9, eta=0.05, constraint_interval=1)
        state.finish_warmup(10.0, iteration=4)
        state.pull_domain_events()
        return state
    
    def test_warmup_weight_is_one(self):
        """Test the task weight is exactly 1 during warm-up"""
        state = LagrangianState(lambda_init=-3.0)
        
        assert state.task_weight == 1.0
    
    def test_finish_warmup_seeds_constraint(self):
        """Test warm-up end seeds v_g_star and resets lambda"""
        # Arrange
        state = LagrangianState(lambda_init=0.5)
        state.lam = 3.0
        
        # Act
        state.finish_warmup(7.5, iteration=12)
        
        # Assert
        assert state.v_g_star == 7.5
        assert state.lam == 0.5
        assert state.task_weight == pytest.approx(expit(0.5))
        events = state.pull_domain_events()
        assert isinstance(events[0], WarmupFinishedEvent)
        assert events[0].iteration == 12
    
    def test_finish_warmup_twice(self, joint_state):
        """Test warm-up cannot end twice"""
        with pytest.raises(WarmupStateException):
            joint_state.finish_warmup(1.0)
    
    def test_multiplier_update(self, joint_state):
        """Test lambda moves by eta times the residual"""
        # Act
        lam = joint_state.update_multiplier(5.0)
        
        # Assert
        assert lam == pytest.approx(0.05 * (0.9 * 10.0 - 5.0))
        event = joint_state.pull_domain_events()[0]
        assert isinstance(event, MultiplierUpdatedEvent)
        assert event.residual == pytest.approx(4.0)
    
    def test_satisfied_constraint_lowers_lambda(self, joint_state):
        """Test a task value above alpha * v_g_star pushes weight to style"""
        joint_state.update_multiplier(10.0)
        
        assert joint_state.lam < 0.0
        assert joint_state.task_weight < 0.5
    
    def test_multiplier_is_clipped(self, joint_state):
        """Test lambda stays within its bounds"""
        for _ in range(1000):
            joint_state.update_multiplier(-100.0)
        
        assert joint_state.lam == 6.0
        
        for _ in range(1000):
            joint_state.update_multiplier(1000.0)
        
        assert joint_state.lam == -6.0
    
    def test_multiplier_during_warmup(self):
        """Test lambda cannot move during warm-up"""
        with pytest.raises(MultiplierStateException):
            LagrangianState().update_multiplier(1.0)
    
    def test_constraint_is_running_max(self, joint_state):
        """Test v_g_star follows the running maximum and never decreases"""
        # Arrange
        state = LagrangianState(constraint_interval=1, warmup=False)
        trace = []
        
        # Act
        for iteration, value in enumerate([2.0, 6.0, 4.0, 9.0, 1.0]):
            trace.append(state.update_constraint(value, iteration))
        
        # Assert
        assert trace == [2.0, 6.0, 6.0, 9.0, 9.0]
        raised = [e for e in state.pull_domain_events() if isinstance(e, ConstraintUpdatedEvent)]
        assert [e.current for e in raised] == [6.0, 9.0]
    
    def test_constraint_interval_gate(self):
        """Test updates off the interval are rejected"""
        state = LagrangianState(constraint_interval=10, warmup=False)
        
        assert state.constraint_due(20)
        assert not state.constraint_due(15)
        with pytest.raises(MultiplierStateException):
            state.update_constraint(1.0, 15)
    
    def test_pinned_weight(self):
        """Test baselines use a fixed weight"""
        state = LagrangianState(warmup=False, pinned_weight=0.8)
        
        assert state.task_weight == 0.8
        assert state.is_baseline
    
    def test_combine_advantages(self):
        """Test w * A_task + (1 - w) * A_style"""
        state = LagrangianState(warmup=False, pinned_weight=0.8)
        advantages = DualAdvantages(np.array([1.0, -1.0]), np.array([0.0, 2.0]))
        
        np.testing.assert_allclose(state.combine_advantages(advantages), [0.8, -0.4])
    
    def test_residual_before_seed_is_nan(self):
        """Test the residual is undefined until v_g_star exists"""
        assert np.isnan(LagrangianState().residual(1.0))
    
    @pytest.mark.parametrize("kwargs", [
        {"alpha": 1.5},
        {"eta": 0.0},
        {"lambda_min": 1.0, "lambda_max": 0.0},
        {"pinned_weight": 2.0},
    ])
    def test_invalid_settings(self, kwargs):
        """Test invalid construction arguments"""
        with pytest.raises(DomainException):
            LagrangianState(**kwargs)
    
    def test_named_arrays_round_trip(self, joint_state):
        """Test the state survives a save and restore"""
        joint_state.update_multiplier(3.0)
        restored = LagrangianState()
        
        restored.restore(joint_state.named_arrays())
        
        assert restored.lam == joint_state.lam
        assert restored.v_g_star == 10.0
        assert not restored.warmup
