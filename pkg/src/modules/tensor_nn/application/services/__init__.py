"""Network application services"""

from .network_factory import NetworkFactory

__all__ = ["NetworkFactory"]
