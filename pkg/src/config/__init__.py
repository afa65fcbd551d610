"""Configuration module for application settings and run configuration"""

from .settings import get_settings, Settings
from .run_config import RunConfig, InvalidConfigurationException, parse_overrides

__all__ = [
    "get_settings",
    "Settings",
    "RunConfig",
    "InvalidConfigurationException",
    "parse_overrides",
]
