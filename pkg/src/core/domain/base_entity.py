"""Entities: mutable domain objects compared by identity"""

from typing import Any, Optional
from uuid import uuid4


class BaseEntity:
    """Domain object with a stable id; networks name themselves ("policy", "critic_task")"""
    
    def __init__(self, id: Optional[str] = None):
        self._id: str = id or uuid4().hex
    
    @property
    def id(self) -> str:
        return self._id
    
    def __eq__(self, other: Any) -> bool:
        return isinstance(other, BaseEntity) and self._id == other._id
    
    def __hash__(self) -> int:
        return hash(self._id)
    
    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self._id}>"
