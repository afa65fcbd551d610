"""Core interfaces (ports)"""

from .repositories import IRepository

__all__ = ["IRepository"]
