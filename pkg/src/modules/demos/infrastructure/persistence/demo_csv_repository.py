"""Demo trajectories as CSV files"""

import csv
import logging
from pathlib import Path

import numpy as np

from core.exceptions import NotFoundException
from core.interfaces.repositories import IRepository
from ...domain.entities import DemoTrajectory
from ...domain.exceptions import DemoParseException, InvalidDemoException

logger = logging.getLogger(__name__)


class DemoCsvRepository(IRepository[DemoTrajectory]):
    """
    Layout: header ``t,<feature names...>`` then one row per sample.
    Values are written with 17 significant digits so a load returns identical floats.
    """
    
    TIME_COLUMN = "t"
    
    def save(self, item: DemoTrajectory, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow([self.TIME_COLUMN, *item.feature_names])
            for t, row in zip(item.times, item.features):
                writer.writerow([f"{t:.17g}", *(f"{v:.17g}" for v in row)])
        logger.info(f"Saved demo '{item.name}'", extra={"path": str(path), "samples": item.length})
        return path
    
    def load(self, path: Path) -> DemoTrajectory:
        """
        Raises:
            NotFoundException: Missing file
            DemoParseException: Malformed content, with the 1-based line number
        """
        path = Path(path)
        if not path.is_file():
            raise NotFoundException("Demo file", str(path))
        
        with path.open(newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if not header or not any(cell.strip() for cell in header):
                raise DemoParseException(str(path), 1, "missing header")
            header = [cell.strip() for cell in header]
            if header[0] != self.TIME_COLUMN or len(header) < 2:
                raise DemoParseException(
                    str(path), 1, f"header must be '{self.TIME_COLUMN},<features...>', got {','.join(header)}"
                )
            rows = []
            for row in reader:
                if not row:
                    continue
                if len(row) != len(header):
                    raise DemoParseException(
                        str(path), reader.line_num, f"expected {len(header)} cells, got {len(row)}"
                    )
                try:
                    rows.append([float(cell) for cell in row])
                except ValueError:
                    raise DemoParseException(str(path), reader.line_num, f"non-numeric cell in {row}")
            last_line = reader.line_num
        
        if len(rows) < 2:
            raise DemoParseException(str(path), max(last_line, 1), f"need at least 2 samples, got {len(rows)}")
        data = np.array(rows, dtype=np.float64)
        times = data[:, 0]
        period = float(times[1] - times[0])
        if not period > 0 or not np.allclose(np.diff(times), period, rtol=1e-6, atol=1e-12):
            raise DemoParseException(str(path), 2, "time column must increase uniformly")
        try:
            return DemoTrajectory(data[:, 1:], period, name=path.stem, feature_names=header[1:])
        except InvalidDemoException as e:
            raise DemoParseException(str(path), 2, e.message)
