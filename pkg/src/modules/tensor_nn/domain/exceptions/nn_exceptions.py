"""Network-specific domain exceptions"""

from typing import Any

from core.exceptions.base_exceptions import DomainException, StateException


class BackwardBeforeForwardException(StateException):
    """Backward pass requested with no cached forward pass"""
    
    def __init__(self, network: str):
        super().__init__(
            message=f"Network '{network}': backward called before forward",
            details={"network": network}
        )


class InvalidParametersException(DomainException):
    """Layer list does not form a valid network"""
    
    def __init__(self, reason: str, **details: Any):
        super().__init__(
            message=f"Invalid network parameters: {reason}",
            details={k: str(v) for k, v in details.items()}
        )
