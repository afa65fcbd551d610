"""Training exceptions"""

from typing import Any

from core.exceptions.base_exceptions import DivergenceException, DomainException


class TrainingDivergedException(DivergenceException):
    """A learning loss became non-finite"""
    
    def __init__(self, what: str, seed: int, iteration: int, value: Any = None):
        super().__init__(
            message=f"Training diverged: {what} is not finite (seed {seed}, iteration {iteration})",
            details={"what": what, "seed": seed, "iteration": iteration, "value": str(value)}
        )


class CheckpointMismatchException(DomainException):
    """Checkpoint does not fit the environment or networks it is loaded into"""
    
    def __init__(self, reason: str, **details: Any):
        super().__init__(
            message=f"Checkpoint mismatch: {reason}",
            details={k: str(v) for k, v in details.items()}
        )
