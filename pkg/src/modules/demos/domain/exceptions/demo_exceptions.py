"""Demonstration domain exceptions"""

from typing import Optional

from core.exceptions.base_exceptions import DomainException, ParseException


class DegenerateGeometryException(DomainException):
    """Reach demo requested towards a zero-length goal"""
    
    def __init__(self, goal):
        super().__init__(
            message=f"Goal vector {tuple(goal)} has zero length",
            details={"goal": [float(g) for g in goal]}
        )


class InvalidDemoException(DomainException):
    """Trajectory or set violates its invariants"""
    
    def __init__(self, reason: str, name: Optional[str] = None):
        super().__init__(
            message=f"Invalid demonstration{f' {name!r}' if name else ''}: {reason}",
            details={"name": name, "reason": reason}
        )


class DemoParseException(ParseException):
    """Demo CSV could not be parsed"""
    
    def __init__(self, path: str, line: int, reason: str):
        super().__init__(
            message=f"{path}:{line}: {reason}",
            details={"path": path, "line": line, "reason": reason}
        )
        self.line = line
