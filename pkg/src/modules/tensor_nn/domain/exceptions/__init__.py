"""Network domain exceptions"""

from .nn_exceptions import BackwardBeforeForwardException, InvalidParametersException

__all__ = ["BackwardBeforeForwardException", "InvalidParametersException"]
