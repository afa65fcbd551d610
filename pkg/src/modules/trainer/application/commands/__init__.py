"""Training commands"""

from .train import TrainCommand, TrainHandler

__all__ = ["TrainCommand", "TrainHandler"]
