"""Evaluation application services"""

from .rollout_evaluator import PolicyController, RolloutEvaluator

__all__ = ["PolicyController", "RolloutEvaluator"]
