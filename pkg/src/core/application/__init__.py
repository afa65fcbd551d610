"""Core application layer components"""

from .base_service import BaseService
from .base_command import Command, CommandHandler
from .dto import DTO

__all__ = ["BaseService", "Command", "CommandHandler", "DTO"]
