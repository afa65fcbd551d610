"""Append-only CSV tables with a fixed header"""

import csv
import math
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Optional, Sequence

import numpy as np


def format_cell(value: Any) -> str:
    """
    Render a cell deterministically.
    Floats use repr (shortest round-trip form), None and NaN become empty.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, np.generic):
        return format_cell(value.item())
    if isinstance(value, float):
        return "" if math.isnan(value) else repr(float(value))
    return str(value)


class CsvTable:
    """
    Single-writer CSV table.
    Rows are flushed on every append so a halted run keeps its history.
    """
    
    def __init__(self, path: Path, columns: Sequence[str], append: bool = False):
        """
        Args:
            path: Destination file
            columns: Header columns
            append: Keep existing rows (resume) instead of truncating
        """
        self.path = Path(path)
        self.columns: List[str] = list(columns)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if not (append and self.path.is_file()):
            with self.path.open("w", newline="", encoding="utf-8") as f:
                csv.writer(f, lineterminator="\n").writerow(self.columns)
    
    def append(self, row: Mapping[str, Any]) -> None:
        """Append one row; missing columns are written empty"""
        with self.path.open("a", newline="", encoding="utf-8") as f:
            csv.writer(f, lineterminator="\n").writerow(
                [format_cell(row.get(c)) for c in self.columns]
            )
    
    def extend(self, rows: Iterable[Mapping[str, Any]]) -> None:
        """Append several rows"""
        for row in rows:
            self.append(row)


def read_rows(path: Path) -> List[dict]:
    """Read a CSV table into dictionaries of strings"""
    with Path(path).open(newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def parse_float(cell: Optional[str]) -> float:
    """Parse a cell written by format_cell (empty -> NaN)"""
    if cell is None or cell == "":
        return float("nan")
    return float(cell)
