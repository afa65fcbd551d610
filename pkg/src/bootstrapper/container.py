"""
IoC (Inversion of Control) container.
Services are registered once at startup by the app factory and resolved by
each module's presentation/dependencies.py.
"""

import inspect
from typing import Any, Callable, Dict, Optional, Type, TypeVar

from core.exceptions import NotFoundException

T = TypeVar("T")


class ServiceNotRegisteredException(NotFoundException):
    def __init__(self, service_type: type):
        super().__init__(resource="Service", identifier=service_type.__name__)


class Container:
    """Instance, lazy-singleton and transient registrations keyed by type"""
    
    def __init__(self):
        self._singletons: Dict[type, Any] = {}
        self._factories: Dict[type, Callable[[], Any]] = {}
        self._transients: Dict[type, Callable[..., Any]] = {}
    
    def register_instance(self, service_type: Type[T], instance: T) -> None:
        self._singletons[service_type] = instance
    
    def register_singleton(self, service_type: Type[T], factory: Callable[[], T]) -> None:
        """Create the instance lazily on first resolve and keep it"""
        def create_once() -> T:
            instance = factory()
            self._singletons[service_type] = instance
            del self._factories[service_type]
            return instance
        self._factories[service_type] = create_once
    
    def register_transient(self, service_type: Type[T], implementation: Callable[..., T]) -> None:
        """New instance per resolve; annotated constructor arguments are resolved from the container"""
        self._transients[service_type] = implementation
    
    def resolve(self, service_type: Type[T]) -> T:
        """
        Raises:
            ServiceNotRegisteredException: Nothing registered for the type
        """
        if service_type in self._singletons:
            return self._singletons[service_type]
        if service_type in self._factories:
            return self._factories[service_type]()
        if service_type in self._transients:
            implementation = self._transients[service_type]
            kwargs = {
                name: self.resolve(param.annotation)
                for name, param in inspect.signature(implementation).parameters.items()
                if param.annotation is not inspect.Parameter.empty and self.is_registered(param.annotation)
            }
            return implementation(**kwargs)
        raise ServiceNotRegisteredException(service_type)
    
    def is_registered(self, service_type: type) -> bool:
        return (
            service_type in self._singletons
            or service_type in self._factories
            or service_type in self._transients
        )
    
    def clear(self) -> None:
        self._singletons.clear()
        self._factories.clear()
        self._transients.clear()


_container: Optional[Container] = None


def get_container() -> Container:
    """Process-wide container, created on first use"""
    global _container
    if _container is None:
        _container = Container()
    return _container


def reset_container() -> None:
    """Drop every registration (tests)"""
    global _container
    _container = None
