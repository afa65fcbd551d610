"""Network domain entities"""

from .mlp import DenseLayer, MlpParams, MlpGradients, MultilayerPerceptron
from .gaussian_policy import GaussianPolicy, PolicyGradients
from .adam import AdamState, adam_step

__all__ = [
    "DenseLayer",
    "MlpParams",
    "MlpGradients",
    "MultilayerPerceptron",
    "GaussianPolicy",
    "PolicyGradients",
    "AdamState",
    "adam_step",
]
