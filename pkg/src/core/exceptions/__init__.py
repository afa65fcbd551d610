"""Core exceptions"""

from .base_exceptions import (
    BaseException,
    DomainException,
    DimensionMismatchException,
    StateException,
    NotFoundException,
    ValidationException,
    BadRequestException,
    ParseException,
    DivergenceException,
)
from .error_codes import ErrorCode, ExitCode

__all__ = [
    "BaseException",
    "DomainException",
    "DimensionMismatchException",
    "StateException",
    "NotFoundException",
    "ValidationException",
    "BadRequestException",
    "ParseException",
    "DivergenceException",
    "ErrorCode",
    "ExitCode",
]
