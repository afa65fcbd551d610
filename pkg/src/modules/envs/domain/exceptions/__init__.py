"""Environment domain exceptions"""

from .env_exceptions import RejectedActionException, UnknownEnvironmentException

__all__ = ["RejectedActionException", "UnknownEnvironmentException"]
