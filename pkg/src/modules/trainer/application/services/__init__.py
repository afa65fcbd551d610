"""Training application services"""

from .ppo_learner import PpoLearner
from .rollout_collector import RolloutCollector
from .training_service import TrainingService, TrainingSession

__all__ = ["PpoLearner", "RolloutCollector", "TrainingService", "TrainingSession"]
