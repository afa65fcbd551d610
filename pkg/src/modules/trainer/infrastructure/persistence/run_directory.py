"""Run directory layout"""

import re
from pathlib import Path
from typing import List, Optional

CHECKPOINT_PATTERN = re.compile(r"^iter_(\d+)\.npz$")


class RunDirectory:
    """
    <root>/
        config.json      validated config snapshot
        metrics.csv      one row per iteration
        checkpoints/     iter_<n>.npz every C iterations, final.npz at the end
        scores.csv       one row per evaluation
    """
    
    def __init__(self, root: Path):
        self.root = Path(root)
    
    @property
    def config_path(self) -> Path:
        return self.root / "config.json"
    
    @property
    def metrics_path(self) -> Path:
        return self.root / "metrics.csv"
    
    @property
    def scores_path(self) -> Path:
        return self.root / "scores.csv"
    
    @property
    def checkpoints_dir(self) -> Path:
        return self.root / "checkpoints"
    
    @property
    def final_checkpoint(self) -> Path:
        return self.checkpoints_dir / "final.npz"
    
    def checkpoint_path(self, iteration: int) -> Path:
        return self.checkpoints_dir / f"iter_{iteration:06d}.npz"
    
    def create(self) -> "RunDirectory":
        self.checkpoints_dir.mkdir(parents=True, exist_ok=True)
        return self
    
    def write_config(self, snapshot: str) -> Path:
        self.config_path.write_text(snapshot, encoding="utf-8")
        return self.config_path
    
    def iteration_checkpoints(self) -> List[Path]:
        """Periodic checkpoints ordered by iteration"""
        if not self.checkpoints_dir.is_dir():
            return []
        found = []
        for path in self.checkpoints_dir.iterdir():
            match = CHECKPOINT_PATTERN.match(path.name)
            if match:
                found.append((int(match.group(1)), path))
        return [path for _, path in sorted(found)]
    
    def latest_checkpoint(self) -> Optional[Path]:
        """final.npz if present, else the highest iteration checkpoint"""
        if self.final_checkpoint.is_file():
            return self.final_checkpoint
        checkpoints = self.iteration_checkpoints()
        return checkpoints[-1] if checkpoints else None
    
    def resume_checkpoint(self) -> Optional[Path]:
        """Highest iteration checkpoint (final.npz duplicates the last one)"""
        checkpoints = self.iteration_checkpoints()
        if checkpoints:
            return checkpoints[-1]
        return self.final_checkpoint if self.final_checkpoint.is_file() else None
