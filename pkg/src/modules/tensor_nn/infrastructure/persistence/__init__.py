"""Network persistence"""

from .named_array_repository import NamedArrayRepository, NamedArrays

__all__ = ["NamedArrayRepository", "NamedArrays"]
