"""Demonstration domain exceptions"""

from .demo_exceptions import DegenerateGeometryException, DemoParseException, InvalidDemoException

__all__ = ["DegenerateGeometryException", "DemoParseException", "InvalidDemoException"]
