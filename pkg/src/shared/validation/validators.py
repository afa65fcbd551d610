"""Common numeric validators shared by the domain modules"""

from typing import Optional, Tuple

import numpy as np

from core.exceptions import DimensionMismatchException, DomainException


class NumericValidators:
    """Common validation methods for arrays"""
    
    @staticmethod
    def as_float_array(value, what: str, ndim: Optional[int] = None) -> np.ndarray:
        """
        Convert to a float64 array and check its rank.
        
        Args:
            value: Array-like input
            what: Name used in error messages
            ndim: Required number of dimensions (any if None)
            
        Returns:
            Float64 array
            
        Raises:
            DimensionMismatchException: If rank differs
        """
        array = np.asarray(value, dtype=np.float64)
        if ndim is not None and array.ndim != ndim:
            raise DimensionMismatchException(f"{what} rank", ndim, array.ndim)
        return array
    
    @staticmethod
    def require_finite(array: np.ndarray, what: str) -> np.ndarray:
        """
        Ensure all values are finite.
        
        Raises:
            DomainException: If any value is NaN or infinite
        """
        if not np.all(np.isfinite(array)):
            raise DomainException(f"{what} contains non-finite values", {"what": what})
        return array
    
    @staticmethod
    def require_last_dim(array: np.ndarray, expected: int, what: str) -> np.ndarray:
        """
        Ensure the trailing dimension matches.
        
        Raises:
            DimensionMismatchException: If the last axis has the wrong size
        """
        actual = array.shape[-1] if array.ndim else None
        if actual != expected:
            raise DimensionMismatchException(what, expected, actual)
        return array
    
    @staticmethod
    def require_same_shape(a: np.ndarray, b: np.ndarray, what: str) -> Tuple[np.ndarray, np.ndarray]:
        """
        Ensure two arrays share a shape.
        
        Raises:
            DimensionMismatchException: If shapes differ
        """
        if a.shape != b.shape:
            raise DimensionMismatchException(what, a.shape, b.shape)
        return a, b
