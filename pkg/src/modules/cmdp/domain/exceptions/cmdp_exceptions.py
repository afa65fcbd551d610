"""Constrained optimization exceptions"""

from core.exceptions.base_exceptions import StateException


class MultiplierStateException(StateException):
    """Multiplier or constraint touched in a state that does not allow it"""
    
    def __init__(self, reason: str):
        super().__init__(message=f"Lagrangian state: {reason}", details={"reason": reason})


class WarmupStateException(StateException):
    """Warm-up finished twice, or queried after it ended"""
    
    def __init__(self, reason: str):
        super().__init__(message=f"Warm-up: {reason}", details={"reason": reason})
