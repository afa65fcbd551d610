"""
Discovers bounded contexts and lets each one register its CLI subcommands.
A module takes part by exposing register(subparsers) in presentation/cli.py.
"""

import argparse
import logging
from importlib import import_module
from pathlib import Path
from typing import List, Tuple

logger = logging.getLogger(__name__)


class ModuleLoader:
    """Loads modules/<name>/presentation/cli.py for every module that has one"""
    
    def __init__(self, modules_package: str = "modules"):
        self.modules_package = modules_package
        self._loaded_modules: List[str] = []
        self._failed_modules: List[Tuple[str, str]] = []
    
    def discover_modules(self) -> List[str]:
        """Module names with a presentation/cli.py, sorted"""
        package = import_module(self.modules_package)
        modules_dir = Path(package.__file__).parent
        return sorted(
            item.name
            for item in modules_dir.iterdir()
            if item.is_dir()
            and not item.name.startswith("_")
            and (item / "presentation" / "cli.py").is_file()
        )
    
    def register_commands(self, subparsers: argparse._SubParsersAction) -> List[str]:
        """
        Import each module's CLI and register its subcommands.
        A module that fails to import is skipped and reported.
        """
        for module_name in self.discover_modules():
            path = f"{self.modules_package}.{module_name}.presentation.cli"
            try:
                cli = import_module(path)
                cli.register(subparsers)
            except (ImportError, AttributeError) as e:
                logger.error(f"Could not load commands of module {module_name}: {e}")
                self._failed_modules.append((module_name, str(e)))
                continue
            self._loaded_modules.append(module_name)
        logger.debug("Loaded CLI modules", extra={"modules": self._loaded_modules})
        return self.loaded_modules
    
    @property
    def loaded_modules(self) -> List[str]:
        return self._loaded_modules.copy()
    
    @property
    def failed_modules(self) -> List[Tuple[str, str]]:
        return self._failed_modules.copy()
