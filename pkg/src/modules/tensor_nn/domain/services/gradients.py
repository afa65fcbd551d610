"""Gradient utilities shared by the learners"""

from typing import List, Sequence, Tuple

import numpy as np


def global_norm(grads: Sequence[np.ndarray]) -> float:
    """L2 norm over all gradient arrays"""
    return float(np.sqrt(sum(float(np.sum(g * g)) for g in grads)))


def clip_by_global_norm(
    grads: Sequence[np.ndarray], max_norm: float
) -> Tuple[List[np.ndarray], float]:
    """
    Rescale gradients so their global norm is at most max_norm.
    Non-finite norms are passed through untouched; the optimizer rejects them.
    
    Returns:
        (possibly rescaled gradients, norm before clipping)
    """
    norm = global_norm(grads)
    if not np.isfinite(norm) or norm <= max_norm:
        return list(grads), norm
    scale = max_norm / (norm + 1e-12)
    return [g * scale for g in grads], norm


def all_finite(arrays: Sequence[np.ndarray]) -> bool:
    return all(bool(np.all(np.isfinite(a))) for a in arrays)
