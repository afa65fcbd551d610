"""scores.csv"""

from pathlib import Path
from typing import List

from shared.utils import CsvTable, read_rows
from ...application.dto import SCORE_COLUMNS, ScoreReport


class ScoresTable:
    """Appends one row per evaluation; existing rows are kept"""

    def __init__(self, path: Path):
        self._table = CsvTable(path, SCORE_COLUMNS, append=True)

    @property
    def path(self) -> Path:
        return self._table.path

    def append(self, report: ScoreReport) -> None:
        self._table.append(report.row())

    def rows(self) -> List[dict]:
        return read_rows(self.path)
