"""Builds the networks a run needs from sizes and a seeded stream"""

from typing import Sequence

import numpy as np

from core.application.base_service import BaseService
from ...domain.entities import GaussianPolicy, MlpParams, MultilayerPerceptron


class NetworkFactory(BaseService):
    """
    Factory for policy, critic and discriminator networks.
    Consumes the given generator in a fixed order so a seed fixes every weight.
    """
    
    POLICY_OUTPUT_GAIN = 0.01
    
    def build_policy(
        self,
        obs_dim: int,
        action_dim: int,
        hidden: Sequence[int],
        rng: np.random.Generator,
        init_log_std: float = 0.0,
    ) -> GaussianPolicy:
        params = MlpParams.initialize(
            [obs_dim, *hidden, action_dim], rng, output_gain=self.POLICY_OUTPUT_GAIN
        )
        self.logger.debug("Built policy", extra={"sizes": params.sizes})
        return GaussianPolicy(
            MultilayerPerceptron(params, name="policy"),
            np.full(action_dim, float(init_log_std)),
        )
    
    def build_critic(
        self, obs_dim: int, hidden: Sequence[int], rng: np.random.Generator, name: str
    ) -> MultilayerPerceptron:
        params = MlpParams.initialize([obs_dim, *hidden, 1], rng)
        self.logger.debug(f"Built {name}", extra={"sizes": params.sizes})
        return MultilayerPerceptron(params, name=name)
    
    def build_discriminator(
        self, feature_dim: int, hidden: Sequence[int], rng: np.random.Generator
    ) -> MultilayerPerceptron:
        """Scalar scorer over concatenated (features, next features)"""
        params = MlpParams.initialize([2 * feature_dim, *hidden, 1], rng)
        return MultilayerPerceptron(params, name="discriminator")
