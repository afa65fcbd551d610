"""Environment application services"""

from .env_factory import make_environment
from .vector_env import VectorEnv, VectorStep

__all__ = ["make_environment", "VectorEnv", "VectorStep"]
