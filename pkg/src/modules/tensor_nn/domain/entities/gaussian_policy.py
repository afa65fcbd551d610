"""Diagonal Gaussian policy over continuous actions"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from core.domain.base_entity import BaseEntity
from core.exceptions import DimensionMismatchException
from shared.validation import NumericValidators
from ..exceptions.nn_exceptions import BackwardBeforeForwardException
from .mlp import MlpGradients, MultilayerPerceptron

_HALF_LOG_TWO_PI = 0.5 * np.log(2.0 * np.pi)


@dataclass
class PolicyGradients:
    mean: MlpGradients
    log_std: np.ndarray

    def arrays(self) -> List[np.ndarray]:
        return [*self.mean.arrays(), self.log_std]


class GaussianPolicy(BaseEntity):
    """
    Mean from an MLP, state-independent log standard deviation.
    log_std is kept inside [LOG_STD_MIN, LOG_STD_MAX] after every change.
    """

    LOG_STD_MIN = -4.0
    LOG_STD_MAX = 1.0

    def __init__(self, mean_network: MultilayerPerceptron, log_std: np.ndarray):
        super().__init__()
        log_std = NumericValidators.as_float_array(log_std, "log_std", ndim=1)
        NumericValidators.require_last_dim(log_std, mean_network.out_dim, "log_std")
        self.mean_network = mean_network
        self.log_std = log_std.copy()
        self.clamp_log_std()
        self._cached_actions: Optional[np.ndarray] = None
        self._cached_mean: Optional[np.ndarray] = None

    @property
    def obs_dim(self) -> int:
        return self.mean_network.in_dim

    @property
    def action_dim(self) -> int:
        return self.mean_network.out_dim

    @property
    def std(self) -> np.ndarray:
        return np.exp(self.log_std)

    def clamp_log_std(self) -> None:
        np.clip(self.log_std, self.LOG_STD_MIN, self.LOG_STD_MAX, out=self.log_std)

    def arrays(self) -> List[np.ndarray]:
        """Live parameter arrays in optimizer order: mean network then log_std"""
        return [*self.mean_network.params.arrays(), self.log_std]

    def mean(self, obs) -> np.ndarray:
        return self.mean_network.forward(obs)

    def sample(
        self, obs, rng: np.random.Generator, deterministic: bool = False
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Draw actions for a batch of observations.

        Args:
            obs: [N x obs_dim]
            rng: Action-sampling stream; one standard normal per action component
            deterministic: Return the mean (the rng is still consumed)

        Returns:
            (actions [N x action_dim], log-probabilities [N])
        """
        mu = np.atleast_2d(self.mean(obs))
        noise = rng.standard_normal(mu.shape)
        actions = mu if deterministic else mu + self.std * noise
        return actions, self._log_density(actions, mu)

    def log_prob(self, obs, actions) -> np.ndarray:
        """
        Log-density of actions; caches what backward() needs.

        Returns:
            [N] log-probabilities
        """
        mu = np.atleast_2d(self.mean(obs))
        actions = np.atleast_2d(NumericValidators.as_float_array(actions, "actions"))
        if actions.shape != mu.shape:
            raise DimensionMismatchException("actions", mu.shape, actions.shape)
        self._cached_mean, self._cached_actions = mu, actions
        return self._log_density(actions, mu)

    def entropy(self) -> float:
        return float(np.sum(self.log_std) + self.action_dim * (0.5 + _HALF_LOG_TWO_PI))

    def backward(self, log_prob_weights: np.ndarray, entropy_weight: float = 0.0) -> PolicyGradients:
        """
        Gradient of sum_n w_n * log_prob_n + entropy_weight * entropy,
        evaluated at the last log_prob() call.
        """
        if self._cached_mean is None:
            raise BackwardBeforeForwardException("policy")
        weights = np.asarray(log_prob_weights, dtype=np.float64).reshape(-1, 1)
        if weights.shape[0] != self._cached_mean.shape[0]:
            raise DimensionMismatchException("log_prob weights", self._cached_mean.shape[0], weights.shape[0])
        variance = np.exp(2.0 * self.log_std)
        diff = self._cached_actions - self._cached_mean
        d_mean = weights * diff / variance
        d_log_std = np.sum(weights * (diff * diff / variance - 1.0), axis=0) + entropy_weight
        return PolicyGradients(self.mean_network.backward(d_mean), d_log_std)

    def _log_density(self, actions: np.ndarray, mu: np.ndarray) -> np.ndarray:
        z = (actions - mu) / self.std
        return np.sum(-0.5 * z * z - self.log_std - _HALF_LOG_TWO_PI, axis=1)
