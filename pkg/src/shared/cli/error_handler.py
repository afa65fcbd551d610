"""Centralized error handling for command-line entry points"""

import logging
from functools import wraps
from typing import Callable

from core.exceptions.base_exceptions import BaseException as AppBaseException
from core.exceptions.error_codes import ExitCode

logger = logging.getLogger(__name__)


def app_exception_handler(exc: AppBaseException) -> int:
    """
    Handle application exceptions.
    
    Args:
        exc: Application exception
        
    Returns:
        Process exit code
    """
    logger.error(exc.message, extra=exc.to_dict())
    return exc.exit_code


def generic_exception_handler(exc: Exception) -> int:
    """
    Handle unexpected exceptions.
    
    Args:
        exc: Any exception
        
    Returns:
        Process exit code
    """
    logger.error(f"Unhandled error: {exc}", exc_info=True)
    return ExitCode.FAILURE


def handle_cli_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorator turning exceptions raised by a subcommand into exit codes.
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except AppBaseException as e:
            return app_exception_handler(e)
        except KeyboardInterrupt:
            logger.warning("Interrupted")
            return ExitCode.FAILURE
        except Exception as e:
            return generic_exception_handler(e)
    
    return wrapper
