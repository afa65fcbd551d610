"""Environment dynamics"""

from abc import ABC, abstractmethod
from typing import Generic, Tuple, TypeVar

import numpy as np

from core.domain.enums import EnvIdEnum
from ..exceptions.env_exceptions import RejectedActionException
from ..value_objects.env_state import PlanarGaitState, PointReachState, StepResult

TState = TypeVar("TState")


class Environment(ABC, Generic[TState]):
    """
    Deterministic dynamics; all randomness comes from the stream passed to reset.
    Episodes end by horizon truncation only.
    """
    
    env_id: EnvIdEnum
    obs_dim: int
    feature_dim: int
    action_dim: int = 2
    
    def __init__(self, dt: float, horizon: int):
        self.dt = float(dt)
        self.horizon = int(horizon)
    
    @abstractmethod
    def reset(self, rng: np.random.Generator) -> TState:
        pass
    
    @abstractmethod
    def step(self, state: TState, action) -> StepResult:
        pass
    
    def _clamp_action(self, action) -> np.ndarray:
        action = np.asarray(action, dtype=np.float64).reshape(self.action_dim)
        if not np.all(np.isfinite(action)):
            raise RejectedActionException(self.env_id.value)
        return np.clip(action, -1.0, 1.0)


class PointReach(Environment[PointReachState]):
    """Planar point mass under acceleration control"""
    
    env_id = EnvIdEnum.PointReach
    obs_dim = PointReachState.OBS_DIM
    feature_dim = PointReachState.FEATURE_DIM
    
    def __init__(
        self,
        dt: float = 0.05,
        horizon: int = 100,
        max_acceleration: float = 4.0,
        goal_x_range: Tuple[float, float] = (0.6, 1.0),
        goal_y_range: Tuple[float, float] = (-0.2, 0.2),
        arena_half_size: float = 2.0,
    ):
        super().__init__(dt, horizon)
        self.max_acceleration = float(max_acceleration)
        self.goal_x_range = goal_x_range
        self.goal_y_range = goal_y_range
        self.arena_half_size = float(arena_half_size)
    
    def reset(self, rng: np.random.Generator) -> PointReachState:
        goal = np.array([rng.uniform(*self.goal_x_range), rng.uniform(*self.goal_y_range)])
        return PointReachState(np.zeros(2), np.zeros(2), goal, np.zeros(2), step=0)
    
    def step(self, state: PointReachState, action) -> StepResult:
        a = self._clamp_action(action)
        position = state.position + state.velocity * self.dt
        position = np.clip(position, -self.arena_half_size, self.arena_half_size)
        velocity = state.velocity + a * self.dt * self.max_acceleration
        
        distance = float(np.linalg.norm(position - state.goal))
        action_change = a - state.prev_action
        settle = -0.01 * float(velocity @ velocity) if distance < 0.05 else 0.0
        terms = {
            "tracking": 1.0 - float(np.tanh(4.0 * distance)),
            "action_rate": -0.01 * float(action_change @ action_change),
            "settle_velocity": settle,
        }
        next_state = PointReachState(position, velocity, state.goal, a, step=state.step + 1)
        return StepResult(
            next_state, terms, next_state.features(),
            truncated=next_state.step >= self.horizon,
        )


class PlanarGait(Environment[PlanarGaitState]):
    """
    Two damped, driven joint oscillators; forward speed grows with joint speed.
    Semi-implicit Euler: velocities update first, positions use the new velocities.
    """
    
    env_id = EnvIdEnum.PlanarGait
    obs_dim = PlanarGaitState.OBS_DIM
    feature_dim = PlanarGaitState.FEATURE_DIM
    
    def __init__(
        self,
        dt: float = 0.05,
        horizon: int = 200,
        drive_gain: float = 8.0,
        damping: float = 2.0,
        stiffness: float = 4.0,
        velocity_sigma: float = 0.25,
        command_range: Tuple[float, float] = (0.3, 1.2),
        arena_half_size: float = 2.0,
    ):
        super().__init__(dt, horizon)
        self.drive_gain = float(drive_gain)
        self.damping = float(damping)
        self.stiffness = float(stiffness)
        self.velocity_sigma = float(velocity_sigma)
        self.command_range = command_range
        self.arena_half_size = float(arena_half_size)
    
    def reset(self, rng: np.random.Generator) -> PlanarGaitState:
        command = rng.uniform(*self.command_range)
        return PlanarGaitState(0.0, np.zeros(2), np.zeros(2), command, np.zeros(2), step=0)
    
    def joint_acceleration(self, joint_pos: np.ndarray, joint_vel: np.ndarray, action: np.ndarray) -> np.ndarray:
        return self.drive_gain * action - self.damping * joint_vel - self.stiffness * joint_pos
    
    def step(self, state: PlanarGaitState, action) -> StepResult:
        a = self._clamp_action(action)
        joint_vel = state.joint_vel + self.joint_acceleration(state.joint_pos, state.joint_vel, a) * self.dt
        joint_pos = np.clip(
            state.joint_pos + joint_vel * self.dt, -self.arena_half_size, self.arena_half_size
        )
        forward_speed = 0.5 * float(np.abs(joint_vel).sum()) / 2.0
        
        action_change = a - state.prev_action
        terms = {
            "velocity_tracking": float(np.exp(-((forward_speed - state.command) ** 2) / self.velocity_sigma)),
            "action_rate": -0.01 * float(action_change @ action_change),
            "joint_velocity": -0.001 * float(joint_vel @ joint_vel),
        }
        next_state = PlanarGaitState(
            forward_speed, joint_pos, joint_vel, state.command, a, step=state.step + 1
        )
        return StepResult(
            next_state, terms, next_state.features(),
            truncated=next_state.step >= self.horizon,
        )
