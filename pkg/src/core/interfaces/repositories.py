"""File repository port"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar

TItem = TypeVar("TItem")


class IRepository(ABC, Generic[TItem]):
    """
    One item per file. Implementations own the format (.npz, .csv) and
    raise NotFoundException for a missing path and ParseException for a
    file they cannot read.
    """
    
    @abstractmethod
    def save(self, item: TItem, path: Path) -> Path:
        """Write the item and return the path actually written (an extension may be added)"""
    
    @abstractmethod
    def load(self, path: Path) -> TItem:
        ...
