"""Flat name -> array archives on disk (.npz)"""

import logging
import os
from pathlib import Path
from typing import Dict

import numpy as np

from core.exceptions import NotFoundException, ParseException
from core.interfaces.repositories import IRepository

logger = logging.getLogger(__name__)

NamedArrays = Dict[str, np.ndarray]


class NamedArrayRepository(IRepository[NamedArrays]):
    """
    Stores a mapping of dotted names to arrays as an uncompressed .npz.
    Writes go to a temporary sibling first so a crash never leaves a torn file.
    """
    
    SUFFIX = ".npz"
    
    def save(self, item: NamedArrays, path: Path) -> Path:
        path = Path(path)
        if path.suffix != self.SUFFIX:
            path = path.with_suffix(self.SUFFIX)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "wb") as handle:
            np.savez(handle, **{name: np.asarray(value) for name, value in item.items()})
        os.replace(tmp, path)
        logger.debug(f"Wrote {len(item)} arrays", extra={"path": str(path)})
        return path
    
    def load(self, path: Path) -> NamedArrays:
        path = Path(path)
        if not path.is_file():
            raise NotFoundException("Checkpoint", str(path))
        try:
            with np.load(path, allow_pickle=False) as archive:
                return {name: archive[name] for name in archive.files}
        except (OSError, ValueError) as e:
            raise ParseException(f"Unreadable checkpoint {path}: {e}", {"path": str(path)})
