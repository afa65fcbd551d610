"""Network domain events"""

from core.domain.events import DomainEvent


class GradientOverflowEvent(DomainEvent):
    """An optimizer step was skipped because a gradient was not finite"""
    
    def __init__(self, optimizer: str, step: int):
        """
        Args:
            optimizer: Name of the optimizer state
            step: Step counter at the time of the skip
        """
        super().__init__(optimizer=optimizer, step=step)
