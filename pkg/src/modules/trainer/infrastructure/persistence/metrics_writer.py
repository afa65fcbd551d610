"""metrics.csv writer"""

from pathlib import Path
from typing import List

from shared.utils import CsvTable, read_rows
from ...application.dto import IterationMetrics, METRICS_COLUMNS


class MetricsWriter:
    """Appends one IterationMetrics row per iteration"""
    
    def __init__(self, path: Path, resume_from: int = None):
        """
        Args:
            path: metrics.csv
            resume_from: Keep only rows of earlier iterations and append after them
        """
        path = Path(path)
        kept: List[dict] = []
        if resume_from is not None and path.is_file():
            kept = [row for row in read_rows(path) if int(row["iteration"]) < resume_from]
        self._table = CsvTable(path, METRICS_COLUMNS)
        self._table.extend(kept)
    
    @property
    def path(self) -> Path:
        return self._table.path
    
    def write(self, metrics: IterationMetrics) -> None:
        self._table.append(metrics.row())
