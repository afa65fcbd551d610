"""Scripted controllers that replay a demonstration in an environment"""

from abc import ABC, abstractmethod

import numpy as np

from modules.demos.domain.entities import DemoTrajectory
from modules.envs.domain.entities import Environment, PlanarGait, PointReach
from modules.envs.domain.exceptions import UnknownEnvironmentException

# Critically damped at dt = 0.05: tracking errors decay geometrically.
POSITION_GAIN = 100.0
VELOCITY_GAIN = 20.0


class Controller(ABC):
    """Maps an environment state to an action in [-1, 1]"""

    @abstractmethod
    def act(self, state) -> np.ndarray:
        pass


class ZeroController(Controller):
    def __init__(self, action_dim: int = 2):
        self.action_dim = action_dim

    def act(self, state) -> np.ndarray:
        return np.zeros(self.action_dim)


class _ReplayController(Controller):
    """
    PD tracking of the demo positions with feed-forward acceleration.
    The reference at step t is demo row t, held at the last row.
    """

    def __init__(self, demo: DemoTrajectory, positions: np.ndarray, velocities: np.ndarray):
        self.demo = demo
        self.positions = positions
        self.velocities = velocities
        # Acceleration that carries reference row t into row t+1 under the env's integrator.
        self.accelerations = np.zeros_like(velocities)
        self.accelerations[:-1] = np.diff(velocities, axis=0) / demo.period

    def reference(self, step: int):
        k = min(int(step), len(self.positions) - 1)
        return self.positions[k], self.velocities[k], self.accelerations[k]

    def desired_acceleration(self, step: int, position: np.ndarray, velocity: np.ndarray) -> np.ndarray:
        q_ref, v_ref, a_ref = self.reference(step)
        return a_ref + POSITION_GAIN * (q_ref - position) + VELOCITY_GAIN * (v_ref - velocity)


class PointReachReplay(_ReplayController):
    """
    Explicit Euler: p' = p + v dt uses the old velocity, so the reference
    velocity at row t is the forward difference to row t+1.
    """

    def __init__(self, demo: DemoTrajectory, env: PointReach):
        positions = demo.features[:, :2]
        velocities = np.zeros_like(positions)
        velocities[:-1] = np.diff(positions, axis=0) / demo.period
        super().__init__(demo, positions, velocities)
        self.max_acceleration = env.max_acceleration

    def act(self, state) -> np.ndarray:
        target = self.desired_acceleration(state.step, state.position, state.velocity)
        return np.clip(target / self.max_acceleration, -1.0, 1.0)


class PlanarGaitReplay(_ReplayController):
    """
    Semi-implicit Euler: q' = q + dq' dt uses the new velocity, so the
    reference velocity at row t is the backward difference from row t-1.
    The drive is inverted through the joint dynamics k a - c dq - kappa q.
    """

    def __init__(self, demo: DemoTrajectory, env: PlanarGait):
        positions = demo.features[:, :2]
        velocities = np.empty_like(positions)
        velocities[0] = demo.features[0, 2:4]
        velocities[1:] = np.diff(positions, axis=0) / demo.period
        super().__init__(demo, positions, velocities)
        self.env = env

    def act(self, state) -> np.ndarray:
        target = self.desired_acceleration(state.step, state.joint_pos, state.joint_vel)
        env = self.env
        drive = (target + env.damping * state.joint_vel + env.stiffness * state.joint_pos) / env.drive_gain
        return np.clip(drive, -1.0, 1.0)


def replay_controller(demo: DemoTrajectory, env: Environment) -> Controller:
    """Scripted demo follower for the given environment"""
    if isinstance(env, PlanarGait):
        return PlanarGaitReplay(demo, env)
    if isinstance(env, PointReach):
        return PointReachReplay(demo, env)
    raise UnknownEnvironmentException(type(env).__name__)
