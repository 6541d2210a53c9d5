"""Application container for chainr.

Holds the services shared by every command of one CLI invocation: the
configuration, the rich console and the enlargement solver, whose cache makes
repeated ``ech`` builds for the same n cheap.
"""

from typing import Any, Optional

from dependency_injector import containers, providers
from rich.console import Console

from ..builders import EnlargementSolver
from .providers import ConsoleProvider


class ChainrContainer(containers.DeclarativeContainer):  # type: ignore[misc]
    """IoC container for chainr.

    - Services are singletons and lazy-loaded on first access
    - Services can be overridden for testing
    - The console is injected from outside
    """

    config = providers.Configuration()

    console = ConsoleProvider()

    solver = providers.Singleton(EnlargementSolver)


def create_container(**overrides: Any) -> ChainrContainer:
    """Create a new container instance with optional overrides.

    Args:
        **overrides: Provider overrides for testing or customization

    Returns:
        Configured container instance
    """
    container = ChainrContainer()
    if overrides:
        container.override_providers(**overrides)
    return container


def configure_container(
    container: ChainrContainer,
    console: Optional[Console] = None,
    config: Optional[dict[str, Any]] = None,
) -> None:
    """Configure a container instance.

    Args:
        container: Container instance to configure
        console: Optional console instance to inject
        config: Optional configuration dictionary
    """
    if console:
        container.console.set_console(console)

    if config:
        container.config.from_dict(config)

    # Configuration changes invalidate cached services
    container.reset_singletons()
