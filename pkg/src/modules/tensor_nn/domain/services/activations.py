"""Elementwise activations with first and second derivatives"""

import numpy as np

from core.domain.enums import ActivationEnum


def activate(kind: ActivationEnum, z: np.ndarray) -> np.ndarray:
    if kind == ActivationEnum.Elu:
        return np.where(z > 0, z, np.expm1(np.minimum(z, 0.0)))
    if kind == ActivationEnum.Tanh:
        return np.tanh(z)
    return z


def derivative(kind: ActivationEnum, z: np.ndarray) -> np.ndarray:
    if kind == ActivationEnum.Elu:
        return np.where(z > 0, 1.0, np.exp(np.minimum(z, 0.0)))
    if kind == ActivationEnum.Tanh:
        t = np.tanh(z)
        return 1.0 - t * t
    return np.ones_like(z)


def second_derivative(kind: ActivationEnum, z: np.ndarray) -> np.ndarray:
    # Needed only by the input-gradient penalty (double backward).
    if kind == ActivationEnum.Elu:
        return np.where(z > 0, 0.0, np.exp(np.minimum(z, 0.0)))
    if kind == ActivationEnum.Tanh:
        t = np.tanh(z)
        return -2.0 * t * (1.0 - t * t)
    return np.zeros_like(z)
