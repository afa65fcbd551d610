"""Environment state value objects"""

from typing import Dict

import numpy as np

from core.domain.value_objects import ValueObject


class PointReachState(ValueObject):
    """Point mass in the plane chasing a goal"""
    
    OBS_DIM = 8
    FEATURE_DIM = 2
    
    def __init__(
        self,
        position: np.ndarray,
        velocity: np.ndarray,
        goal: np.ndarray,
        prev_action: np.ndarray,
        step: int = 0,
    ):
        self.position = np.array(position, dtype=np.float64)
        self.velocity = np.array(velocity, dtype=np.float64)
        self.goal = np.array(goal, dtype=np.float64)
        self.prev_action = np.array(prev_action, dtype=np.float64)
        self.step = int(step)
        self._seal()
    
    def observation(self) -> np.ndarray:
        """[p, v, g, previous action]"""
        return np.concatenate([self.position, self.velocity, self.goal, self.prev_action])
    
    def features(self) -> np.ndarray:
        """Style features: position"""
        return self.position.copy()


class PlanarGaitState(ValueObject):
    """Two driven joints whose speed propels the body forward"""
    
    OBS_DIM = 8
    FEATURE_DIM = 4
    
    def __init__(
        self,
        forward_speed: float,
        joint_pos: np.ndarray,
        joint_vel: np.ndarray,
        command: float,
        prev_action: np.ndarray,
        step: int = 0,
    ):
        self.forward_speed = float(forward_speed)
        self.joint_pos = np.array(joint_pos, dtype=np.float64)
        self.joint_vel = np.array(joint_vel, dtype=np.float64)
        self.command = float(command)
        self.prev_action = np.array(prev_action, dtype=np.float64)
        self.step = int(step)
        self._seal()
    
    def observation(self) -> np.ndarray:
        """[v_x, qL, qR, dqL, dqR, v*, previous action]"""
        return np.concatenate([
            [self.forward_speed],
            self.joint_pos,
            self.joint_vel,
            [self.command],
            self.prev_action,
        ])
    
    def features(self) -> np.ndarray:
        """Style features: (qL, qR, dqL, dqR)"""
        return np.concatenate([self.joint_pos, self.joint_vel])


class StepResult(ValueObject):
    """Outcome of one environment step"""
    
    def __init__(
        self,
        state,
        reward_terms: Dict[str, float],
        features: np.ndarray,
        truncated: bool,
        terminated: bool = False,
    ):
        self.state = state
        self.reward_terms = dict(reward_terms)
        # Summed from the terms so the breakdown always adds up exactly.
        self.reward = float(sum(self.reward_terms.values()))
        self.features = np.array(features, dtype=np.float64)
        self.truncated = bool(truncated)
        self.terminated = bool(terminated)
        self._seal()
    
    @property
    def done(self) -> bool:
        return self.truncated or self.terminated
