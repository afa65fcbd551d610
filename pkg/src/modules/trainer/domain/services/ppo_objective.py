"""Clipped surrogate objective"""

from typing import Tuple

import numpy as np


def clipped_surrogate(
    ratio: np.ndarray, advantages: np.ndarray, clip_range: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Per-sample min(r A, clip(r, 1 - eps, 1 + eps) A) and its derivative with
    respect to the new log-probability.
    
    The derivative is A * r where the unclipped branch is active and zero where
    the ratio is clipped in the direction the advantage pushes.
    
    Returns:
        (surrogate, d surrogate / d log_prob, clipped mask)
    """
    clipped_ratio = np.clip(ratio, 1.0 - clip_range, 1.0 + clip_range)
    surrogate = np.minimum(ratio * advantages, clipped_ratio * advantages)
    inactive = ((advantages > 0) & (ratio > 1.0 + clip_range)) | ((advantages < 0) & (ratio < 1.0 - clip_range))
    grad = np.where(inactive, 0.0, advantages * ratio)
    clipped = np.abs(ratio - 1.0) > clip_range
    return surrogate, grad, clipped
