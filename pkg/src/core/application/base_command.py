"""Commands and their handlers: one per subcommand that writes artifacts"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from pydantic import BaseModel, ConfigDict

TResult = TypeVar("TResult")


class Command(BaseModel, ABC):
    """Frozen request; fields may hold paths and RunConfig instances"""
    
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class CommandHandler(ABC, Generic[TResult]):
    @abstractmethod
    def handle(self, command: Command) -> TResult:
        """Execute the command and return what it produced (a path, a report, rows)"""
