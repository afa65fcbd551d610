"""
Domain events: state transitions and numerical incidents recorded by
aggregates and drained once per iteration by the application layer.
"""

from abc import ABC
from datetime import datetime, timezone
from typing import Any, Dict


class DomainEvent(ABC):
    """
    Base domain event.
    Keyword payload fields become attributes and are carried into to_dict().
    """
    
    def __init__(self, **payload: Any):
        self.occurred_at: datetime = datetime.now(timezone.utc)
        self._payload: Dict[str, Any] = dict(payload)
        for name, value in payload.items():
            setattr(self, name, value)
    
    @property
    def event_type(self) -> str:
        return self.__class__.__name__
    
    @property
    def payload(self) -> Dict[str, Any]:
        return dict(self._payload)
    
    def to_dict(self) -> Dict[str, Any]:
        """Flat record for structured logging"""
        return {
            "event_type": self.event_type,
            "occurred_at": self.occurred_at.isoformat(),
            **self._payload,
        }
    
    def __repr__(self) -> str:
        fields = ", ".join(f"{k}={v!r}" for k, v in self._payload.items())
        return f"<{self.event_type}({fields})>"
