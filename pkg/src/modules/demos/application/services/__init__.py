"""Demonstration application services"""

from .demo_service import DemoService

__all__ = ["DemoService"]
