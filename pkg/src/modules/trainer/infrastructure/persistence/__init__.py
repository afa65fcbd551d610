"""Training persistence"""

from .checkpoint_repository import Checkpoint, CheckpointRepository
from .metrics_writer import MetricsWriter
from .run_directory import RunDirectory

__all__ = ["Checkpoint", "CheckpointRepository", "MetricsWriter", "RunDirectory"]
