"""Environment domain exceptions"""

from typing import Optional

from core.exceptions.base_exceptions import BadRequestException, DomainException


class RejectedActionException(DomainException):
    """Action contains NaN or infinity"""
    
    def __init__(self, env_id: str, env_index: Optional[int] = None):
        where = f" (env {env_index})" if env_index is not None else ""
        super().__init__(
            message=f"Rejected non-finite action for {env_id}{where}",
            details={"env_id": env_id, "env_index": env_index}
        )


class UnknownEnvironmentException(BadRequestException):
    """Environment id is not registered"""
    
    def __init__(self, env_id: str):
        super().__init__(
            message=f"Unknown environment '{env_id}'",
            details={"env_id": env_id}
        )
