"""Demonstration commands"""

from .generate_demo import GenerateDemoCommand, GenerateDemoHandler

__all__ = ["GenerateDemoCommand", "GenerateDemoHandler"]
