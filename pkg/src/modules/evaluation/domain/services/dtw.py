"""Relaxed dynamic time warping"""

import numpy as np
from scipy.spatial.distance import cdist

from core.exceptions import DimensionMismatchException
from ..exceptions.evaluation_exceptions import EmptyTrajectoryException
from ..value_objects.trajectory import Trajectory


def relaxed_dtw(seq1: Trajectory, seq2: Trajectory) -> float:
    """
    DTW where seq1 is consumed entirely but may start and end anywhere in seq2.
    
    D[0, :] = 0, D[:, 0] = inf,
    D[i, j] = |seq1[i] - seq2[j]| + min(D[i-1, j], D[i, j-1], D[i-1, j-1]),
    result = min_j D[n, j]. Not symmetric: pass the policy trajectory first.
    """
    a, b = _features(seq1, "seq1"), _features(seq2, "seq2")
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchException("DTW feature dimension", a.shape[1], b.shape[1])
    cost = cdist(a, b, metric="euclidean")
    n, m = cost.shape
    
    previous = np.zeros(m + 1)
    for i in range(n):
        current = np.empty(m + 1)
        current[0] = np.inf
        # Vertical and diagonal predecessors come from the previous row.
        from_above = np.minimum(previous[1:], previous[:-1])
        for j in range(m):
            current[j + 1] = cost[i, j] + min(from_above[j], current[j])
        previous = current
    return float(previous[1:].min())


def _features(trajectory, what: str) -> np.ndarray:
    if not isinstance(trajectory, Trajectory):
        trajectory = Trajectory(trajectory)
    if len(trajectory) == 0:
        raise EmptyTrajectoryException(what)
    return trajectory.features
