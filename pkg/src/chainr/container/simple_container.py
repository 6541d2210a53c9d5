"""Type-keyed container handed to every command.

Example:
    Wiring a command by hand::

        from rich.console import Console

        from chainr.builders import EnlargementSolver
        from chainr.commands import SolveCommand
        from chainr.container import SimpleContainer

        container = SimpleContainer()
        container.register(Console, Console(stderr=True))
        container.register_factory(EnlargementSolver, EnlargementSolver)

        SolveCommand(container).run(n=5)
"""

from typing import Any, Callable, Optional, TypeVar

T = TypeVar("T")


class SimpleContainer:
    """Registry of service instances and lazily created singletons."""

    def __init__(self) -> None:
        self._services: dict[type, Any] = {}
        self._factories: dict[type, Callable[[], Any]] = {}

    def register(self, service_type: type[T], instance: T) -> None:
        self._services[service_type] = instance

    def register_factory(self, service_type: type[T], factory: Callable[[], T]) -> None:
        """Register a factory; it is called once, on first ``get``."""
        self._factories[service_type] = factory

    def get(self, service_type: type[T]) -> T:
        """Get a service instance.

        Raises:
            ValueError: If the service is not registered
        """
        if service_type in self._services:
            return self._services[service_type]  # type: ignore[no-any-return]

        if service_type in self._factories:
            instance = self._factories[service_type]()
            self._services[service_type] = instance
            return instance  # type: ignore[no-any-return]

        service_name = getattr(service_type, "__name__", str(service_type))
        available = [
            getattr(svc, "__name__", str(svc))
            for svc in list(self._services) + list(self._factories)
        ]
        raise ValueError(
            f"Service '{service_name}' not registered. Available services: {available}"
        )

    def get_optional(self, service_type: type[T]) -> Optional[T]:
        try:
            return self.get(service_type)
        except ValueError:
            return None

    def has(self, service_type: type) -> bool:
        return service_type in self._services or service_type in self._factories

    def clear(self) -> None:
        self._services.clear()
        self._factories.clear()

    def reset_singletons(self) -> None:
        """Drop instances created by factories (factories stay registered)."""
        self._services = {
            svc_type: instance
            for svc_type, instance in self._services.items()
            if svc_type not in self._factories
        }
