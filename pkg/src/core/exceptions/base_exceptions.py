"""Base exception classes"""

from typing import Any, Dict, Optional
from .error_codes import ErrorCode, ExitCode


class BaseException(Exception):
    """
    Base application exception.
    Carries a stable error code for logs and the exit code the CLI returns.
    """
    
    def __init__(
        self,
        message: str,
        error_code: ErrorCode,
        exit_code: int = ExitCode.FAILURE,
        details: Optional[Dict[str, Any]] = None
    ):
        """
        Initialize exception.
        
        Args:
            message: Human-readable error message
            error_code: Error code enum
            exit_code: Process exit code when the error reaches the CLI
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code
        self.details = details or {}
    
    def to_dict(self) -> Dict[str, Any]:
        """Flat record for structured logging; detail keys are prefixed to avoid LogRecord clashes"""
        return {
            "error_code": str(self.error_code),
            "exit_code": self.exit_code,
            **{f"detail_{k}": v for k, v in self.details.items()},
        }


class DomainException(BaseException):
    """
    Domain layer exception.
    Used for violated preconditions of domain operations.
    """
    
    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        error_code: ErrorCode = ErrorCode.DOMAIN_VALIDATION_ERROR,
    ):
        super().__init__(
            message=message,
            error_code=error_code,
            exit_code=ExitCode.FAILURE,
            details=details
        )


class DimensionMismatchException(DomainException):
    """Array shape does not match what an operation expects"""
    
    def __init__(self, what: str, expected: Any, actual: Any):
        super().__init__(
            message=f"{what}: expected dimension {expected}, got {actual}",
            details={"what": what, "expected": str(expected), "actual": str(actual)},
            error_code=ErrorCode.DIMENSION_MISMATCH,
        )


class StateException(DomainException):
    """Operation called in a state that does not allow it"""
    
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            details=details,
            error_code=ErrorCode.INVALID_STATE,
        )


class NotFoundException(BaseException):
    """Resource not found exception"""
    
    def __init__(self, resource: str, identifier: Any):
        super().__init__(
            message=f"{resource} '{identifier}' not found",
            error_code=ErrorCode.NOT_FOUND,
            exit_code=ExitCode.USAGE,
            details={"resource": resource, "identifier": str(identifier)}
        )


class ValidationException(BaseException):
    """Validation exception"""
    
    def __init__(self, message: str, errors: Dict[str, Any]):
        super().__init__(
            message=message,
            error_code=ErrorCode.VALIDATION_ERROR,
            exit_code=ExitCode.USAGE,
            details={"errors": errors}
        )


class BadRequestException(BaseException):
    """Bad command-line request"""
    
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=ErrorCode.BAD_REQUEST,
            exit_code=ExitCode.USAGE,
            details=details
        )


class ParseException(BaseException):
    """Input file could not be parsed"""
    
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=ErrorCode.PARSE_ERROR,
            exit_code=ExitCode.USAGE,
            details=details
        )


class DivergenceException(BaseException):
    """Numerical divergence that halts a run"""
    
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            error_code=ErrorCode.TRAINING_DIVERGED,
            exit_code=ExitCode.DIVERGENCE,
            details=details
        )
