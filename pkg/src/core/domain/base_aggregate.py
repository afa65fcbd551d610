"""Aggregate root: an entity that records domain events and counts its state changes"""

from typing import List, Optional

from .base_entity import BaseEntity
from .events import DomainEvent


class AggregateRoot(BaseEntity):
    """
    Entity with a pending-event queue and a version counter.
    
    Non-fatal numerical incidents (skipped optimizer steps, warm-up hand-over,
    multiplier moves) are queued here; the training loop drains them once per
    iteration and logs them with the iteration number attached.
    """
    
    def __init__(self, id: Optional[str] = None):
        super().__init__(id)
        self._pending: List[DomainEvent] = []
        self._version = 0
    
    def add_domain_event(self, event: DomainEvent) -> None:
        self._pending.append(event)
    
    def pull_domain_events(self) -> List[DomainEvent]:
        """Return pending events oldest first and empty the queue"""
        events, self._pending = self._pending, []
        return events
    
    @property
    def version(self) -> int:
        """Number of applied state changes, e.g. optimizer steps taken"""
        return self._version
    
    def increment_version(self) -> None:
        self._version += 1
