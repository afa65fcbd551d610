"""
Bootstrapper: IoC container, module loading and the CLI factory.
"""

from .container import Container, get_container, reset_container
from .app_factory import create_cli, run_cli
from .module_loader import ModuleLoader

__all__ = ["Container", "get_container", "reset_container", "create_cli", "run_cli", "ModuleLoader"]
