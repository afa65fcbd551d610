"""Immutable value objects holding NumPy arrays"""

from abc import ABC
from typing import Any, Iterator, Tuple

import numpy as np

_SEALED = "_sealed"


class ValueObject(ABC):
    """
    Attribute-defined, immutable record.
    
    Subclasses assign their attributes in __init__ and finish with _seal();
    after that attributes cannot be rebound and array attributes are read-only.
    Equality compares arrays elementwise.
    """
    
    def _fields(self) -> Iterator[Tuple[str, Any]]:
        return ((k, v) for k, v in self.__dict__.items() if k != _SEALED)
    
    def _seal(self) -> None:
        for _, value in self._fields():
            if isinstance(value, np.ndarray):
                value.setflags(write=False)
        object.__setattr__(self, _SEALED, True)
    
    def __setattr__(self, key: str, value: Any) -> None:
        if self.__dict__.get(_SEALED):
            raise AttributeError(f"{self.__class__.__name__} is immutable")
        object.__setattr__(self, key, value)
    
    def __eq__(self, other: Any) -> bool:
        if type(other) is not type(self):
            return False
        mine, theirs = dict(self._fields()), dict(other._fields())
        if mine.keys() != theirs.keys():
            return False
        return all(_same(mine[k], theirs[k]) for k in mine)
    
    def __hash__(self) -> int:
        return hash(tuple(
            (k, (v.shape, v.tobytes()) if isinstance(v, np.ndarray) else v)
            for k, v in sorted(self._fields())
        ))
    
    def __repr__(self) -> str:
        attrs = ", ".join(f"{k}={v!r}" for k, v in self._fields())
        return f"{self.__class__.__name__}({attrs})"


def _same(a: Any, b: Any) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return bool(np.array_equal(a, b))
    return bool(a == b)
