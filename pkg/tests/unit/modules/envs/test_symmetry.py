"""Test symmetry operators"""

import numpy as np
import pytest

from core.exceptions import DimensionMismatchException, DomainException
from modules.envs.domain import MIRROR, SymmetryOperator, symmetry_ops
from modules.envs.domain.exceptions import UnknownEnvironmentException


class TestSymmetryOperator:
    """Test SymmetryOperator"""
    
    def test_mirror_swaps_sides(self):
        """Test features swap left and right"""
        np.testing.assert_array_equal(MIRROR.features(np.array([1.0, 2.0, 3.0, 4.0])), [2.0, 1.0, 4.0, 3.0])
        np.testing.assert_array_equal(MIRROR.actions(np.array([0.1, 0.2])), [0.2, 0.1])
    
    def test_mirror_is_involution(self, rng):
        """Test applying the operator twice is the identity"""
        x = rng.normal(size=(5, 8))
        
        np.testing.assert_array_equal(MIRROR.observations(MIRROR.observations(x)), x)
    
    def test_pairs_apply_to_both_halves(self):
        """Test concatenated pairs are mirrored half by half"""
        pair = np.arange(8.0)
        
        np.testing.assert_array_equal(MIRROR.pairs(pair), [1, 0, 3, 2, 5, 4, 7, 6])
    
    def test_wrong_width(self):
        """Test mismatched widths raise"""
        with pytest.raises(DimensionMismatchException):
            MIRROR.features(np.zeros(3))
        with pytest.raises(DimensionMismatchException):
            MIRROR.pairs(np.zeros(4))
    
    def test_non_involution_rejected(self):
        """Test a 3-cycle is not accepted"""
        with pytest.raises(DomainException):
            SymmetryOperator("cycle", [1, 2, 0], [0], [0])


class TestSymmetryOps:
    """Test the per-environment symmetry group"""
    
    def test_groups(self):
        """Test the gait has the mirror and the reach has none"""
        assert symmetry_ops("planar_gait") == [MIRROR]
        assert symmetry_ops("point_reach") == []
    
    def test_unknown(self):
        """Test unknown ids raise"""
        with pytest.raises(UnknownEnvironmentException):
            symmetry_ops("hopper")
