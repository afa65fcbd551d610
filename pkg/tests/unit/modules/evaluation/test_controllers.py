"""Test scripted demo-replay controllers"""

import numpy as np

from modules.demos.domain.entities import DemoTrajectory
from modules.demos.domain.services import generate_gait_demo, generate_reach_demo
from modules.envs.domain import PlanarGait, PointReach
from modules.evaluation.application.services import RolloutEvaluator
from modules.evaluation.domain.services import (
    PlanarGaitReplay,
    PointReachReplay,
    relaxed_dtw,
    replay_controller,
)


class ConstantController:
    def __init__(self, action):
        self.action = np.asarray(action, dtype=np.float64)
    
    def act(self, state) -> np.ndarray:
        return self.action


def rollout_positions(env, controller, rng):
    state = env.reset(rng)
    rows = [state.features()]
    done = False
    while not done:
        result = env.step(state, controller.act(state))
        rows.append(result.features)
        state, done = result.state, result.done
    return np.array(rows)


class TestReplayControllers:
    """Test replay controllers reproduce their demos"""
    
    def test_factory(self):
        """Test the controller follows the environment type"""
        assert isinstance(replay_controller(generate_reach_demo(), PointReach()), PointReachReplay)
        assert isinstance(replay_controller(generate_gait_demo(), PlanarGait()), PlanarGaitReplay)
    
    def test_reach_replay_of_own_rollout_is_exact(self, rng):
        """Test a demo recorded from the environment is reproduced to rounding error"""
        # Arrange
        env = PointReach(horizon=60)
        t = np.arange(60)
        actions = np.stack([0.5 * np.sin(0.2 * t), 0.3 * np.cos(0.1 * t)], axis=1)
        state = env.reset(rng)
        rows = [state.features()]
        for action in actions:
            state = env.step(state, action).state
            rows.append(state.features())
        demo = DemoTrajectory(np.array(rows), period=env.dt)
        
        # Act
        replayed = rollout_positions(env, PointReachReplay(demo, env), rng)
        
        # Assert
        np.testing.assert_allclose(replayed, demo.features, atol=1e-8)
    
    def test_reach_replay_scores_high(self, rng):
        """Test replaying the generated reach demo imitates it closely"""
        env = PointReach()
        demo = generate_reach_demo()
        evaluator = RolloutEvaluator(env, demo, eta=100.0)
        
        report = evaluator.rollout_metrics(replay_controller(demo, env), 1, rng)
        
        assert report.imitation_score_mean >= 0.95
    
    def test_gait_replay_scores_high(self, rng):
        """Test replaying the gait demo imitates it closely"""
        env = PlanarGait()
        demo = generate_gait_demo()
        evaluator = RolloutEvaluator(env, demo, eta=100.0)
        
        report = evaluator.rollout_metrics(replay_controller(demo, env), 1, rng)
        
        assert report.imitation_score_mean >= 0.95
    
    def test_replay_beats_in_phase_drive(self, rng):
        """Test the replay is far closer to the demo than a constant in-phase drive"""
        # Arrange
        env = PlanarGait()
        demo = generate_gait_demo()
        
        # Act
        replay = rollout_positions(env, replay_controller(demo, env), rng)
        in_phase = rollout_positions(env, ConstantController([0.5, 0.5]), rng)
        
        # Assert
        # Both joints settle at q = 1, a pose the anti-phase demo never visits.
        replay_cost = relaxed_dtw(replay[:, :2], demo.features[:, :2])
        in_phase_cost = relaxed_dtw(in_phase[:, :2], demo.features[:, :2])
        assert replay_cost < 0.05 * in_phase_cost
