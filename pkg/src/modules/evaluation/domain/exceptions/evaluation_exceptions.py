"""Evaluation exceptions"""

from core.exceptions.base_exceptions import DomainException


class EmptySymmetryGroupException(DomainException):
    """Symmetry score requested without any symmetry operator"""
    
    def __init__(self):
        super().__init__(message="Symmetry score is undefined for an empty symmetry group")


class EmptyTrajectoryException(DomainException):
    def __init__(self, what: str):
        super().__init__(message=f"{what} trajectory is empty", details={"what": what})
