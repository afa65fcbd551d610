"""Constrained optimization domain events"""

from core.domain.events import DomainEvent


class WarmupFinishedEvent(DomainEvent):
    def __init__(self, iteration: int, v_g_star: float):
        super().__init__(iteration=iteration, v_g_star=v_g_star)


class ConstraintUpdatedEvent(DomainEvent):
    """Best task value raised"""
    
    def __init__(self, iteration: int, previous: float, current: float):
        super().__init__(iteration=iteration, previous=previous, current=current)


class MultiplierUpdatedEvent(DomainEvent):
    def __init__(self, previous: float, current: float, residual: float):
        super().__init__(previous=previous, current=current, residual=residual)
