"""Shared command-line utilities"""

from .error_handler import handle_cli_errors, app_exception_handler, generic_exception_handler

__all__ = ["handle_cli_errors", "app_exception_handler", "generic_exception_handler"]
