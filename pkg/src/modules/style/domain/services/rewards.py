"""Style reward functions"""

from typing import Sequence

import numpy as np

from core.exceptions import DimensionMismatchException
from modules.envs.domain.services.symmetry import SymmetryOperator
from ..value_objects.tracking_reward_spec import TrackingRewardSpec


def tracking_reward(spec: TrackingRewardSpec, agent_features, demo_features) -> np.ndarray:
    """exp(-sum_i w_i (s_i - s_hat_i)^2) over [..., d] inputs"""
    agent = np.asarray(agent_features, dtype=np.float64)
    demo = np.asarray(demo_features, dtype=np.float64)
    if agent.shape[-1] != spec.weights.size or demo.shape[-1] != spec.weights.size:
        raise DimensionMismatchException(
            "tracking features", spec.weights.size, (agent.shape[-1], demo.shape[-1])
        )
    diff = agent - demo
    return np.exp(-np.sum(spec.weights * diff * diff, axis=-1))


def score_to_reward(scores) -> np.ndarray:
    """Least-squares reward max(0, 1 - 0.25 (D - 1)^2); always in [0, 1]"""
    scores = np.asarray(scores, dtype=np.float64)
    return np.maximum(0.0, 1.0 - 0.25 * (scores - 1.0) ** 2)


def adversarial_reward(head, features, next_features) -> np.ndarray:
    """Reward per transition from the discriminator score of (s, s')"""
    return score_to_reward(head.score(_pairs(features, next_features)))


def symmetric_style_reward(
    head, features, next_features, group: Sequence[SymmetryOperator]
) -> np.ndarray:
    """Average adversarial reward over the transition and its images under the group"""
    pairs = _pairs(features, next_features)
    total = score_to_reward(head.score(pairs))
    for op in group:
        total = total + score_to_reward(head.score(op.pairs(pairs)))
    return total / (len(group) + 1)


def _pairs(features, next_features) -> np.ndarray:
    features = np.asarray(features, dtype=np.float64)
    next_features = np.asarray(next_features, dtype=np.float64)
    if features.shape != next_features.shape:
        raise DimensionMismatchException("transition features", features.shape, next_features.shape)
    return np.concatenate([features, next_features], axis=-1)
