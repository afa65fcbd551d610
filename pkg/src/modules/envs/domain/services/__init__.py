"""Environment domain services"""

from .symmetry import MIRROR, SymmetryOperator, symmetry_ops

__all__ = ["MIRROR", "SymmetryOperator", "symmetry_ops"]
