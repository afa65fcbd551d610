"""Test relaxed dynamic time warping"""

import numpy as np
import pytest

from core.exceptions import DimensionMismatchException
from modules.evaluation.domain.exceptions import EmptyTrajectoryException
from modules.evaluation.domain.services import relaxed_dtw
from modules.evaluation.domain.value_objects import Trajectory


def brute_force_dtw(a: np.ndarray, b: np.ndarray) -> float:
    """Minimum over every warping path that covers all of a and any contiguous stretch of b"""
    n, m = len(a), len(b)
    cost = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    best = np.inf
    
    def walk(i, j, total):
        nonlocal best
        total += cost[i, j]
        if i == n - 1:
            best = min(best, total)
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di < n and j + dj < m:
                walk(i + di, j + dj, total)
    
    for start in range(m):
        walk(0, start, 0.0)
    return best


class TestRelaxedDtw:
    """Test relaxed_dtw"""
    
    def test_identical_sequences(self, rng):
        """Test a sequence is at distance zero from itself"""
        x = rng.normal(size=(10, 3))
        
        assert relaxed_dtw(x, x) == pytest.approx(0.0)
    
    def test_subsequence_is_free(self, rng):
        """Test seq1 may start and end anywhere in seq2"""
        demo = rng.normal(size=(12, 2))
        
        assert relaxed_dtw(demo[3:7], demo) == pytest.approx(0.0)
    
    def test_not_symmetric(self, rng):
        """Test seq1 must be consumed entirely while seq2 need not be"""
        demo = rng.normal(size=(12, 2))
        
        assert relaxed_dtw(demo, demo[3:7]) > 0.0
    
    def test_time_stretch_is_free(self):
        """Test repeating samples costs nothing"""
        x = np.array([[0.0], [1.0], [2.0]])
        stretched = np.array([[0.0], [0.0], [1.0], [1.0], [2.0]])
        
        assert relaxed_dtw(stretched, x) == pytest.approx(0.0)
    
    def test_known_value(self):
        """Test a hand-computed distance"""
        a = np.array([[0.0], [3.0]])
        b = np.array([[1.0], [2.0]])
        
        # Best path: a0->b0 (1), a1->b1 (1)
        assert relaxed_dtw(a, b) == pytest.approx(2.0)
    
    def test_matches_brute_force(self):
        """Test the recursion against exhaustive path enumeration"""
        rng = np.random.default_rng(7)
        for _ in range(200):
            n, m, d = rng.integers(1, 5), rng.integers(1, 5), rng.integers(1, 3)
            a, b = rng.normal(size=(n, d)), rng.normal(size=(m, d))
            
            assert relaxed_dtw(a, b) == pytest.approx(brute_force_dtw(a, b), abs=1e-12)
    
    def test_accepts_trajectories_and_one_dimensional_input(self):
        """Test Trajectory inputs and 1-D arrays as single-channel data"""
        a = Trajectory([0.0, 1.0])
        
        assert relaxed_dtw(a, np.array([0.0, 1.0, 5.0])) == pytest.approx(0.0)
        assert a.dim == 1 and len(a) == 2
    
    def test_dimension_mismatch(self):
        """Test feature widths must match"""
        with pytest.raises(DimensionMismatchException):
            relaxed_dtw(np.zeros((2, 2)), np.zeros((2, 3)))
    
    def test_empty_trajectory(self):
        """Test empty inputs are rejected"""
        with pytest.raises(EmptyTrajectoryException):
            relaxed_dtw(np.zeros((0, 2)), np.zeros((2, 2)))
