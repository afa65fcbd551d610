"""Error code enumeration"""

from enum import Enum


class ErrorCode(str, Enum):
    """
    Standard error codes used throughout the application.
    Provides consistent error identification.
    """
    
    # Usage errors
    BAD_REQUEST = "BAD_REQUEST"
    NOT_FOUND = "NOT_FOUND"
    VALIDATION_ERROR = "VALIDATION_ERROR"
    
    # Domain errors
    DOMAIN_VALIDATION_ERROR = "DOMAIN_VALIDATION_ERROR"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    INVALID_STATE = "INVALID_STATE"
    
    # Numerical errors
    TRAINING_DIVERGED = "TRAINING_DIVERGED"
    
    # Input file errors
    PARSE_ERROR = "PARSE_ERROR"
    
    def __str__(self) -> str:
        """String representation"""
        return self.value


class ExitCode:
    """Process exit codes returned by the command-line surface"""

    SUCCESS = 0
    FAILURE = 1
    USAGE = 2
    DIVERGENCE = 3
