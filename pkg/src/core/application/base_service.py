"""Base class for application services"""

from abc import ABC
import logging
from typing import Any, Iterable

from core.domain.events import DomainEvent


class BaseService(ABC):
    """Application service with a module-qualified logger"""
    
    def __init__(self):
        self._logger = logging.getLogger(
            f"{self.__class__.__module__}.{self.__class__.__name__}"
        )
    
    @property
    def logger(self) -> logging.Logger:
        return self._logger
    
    def publish_events(self, events: Iterable[DomainEvent], **context: Any) -> int:
        """
        Log drained domain events as warnings with their payload as structured fields.
        
        Args:
            events: Events pulled from an aggregate
            **context: Fields added to every record (iteration, run_name)
            
        Returns:
            Number of events logged
        """
        count = 0
        for event in events:
            fields = {**context, "event_type": event.event_type, **event.payload}
            self._logger.warning(event.event_type, extra=fields)
            count += 1
        return count
