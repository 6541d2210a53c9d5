"""Provider definitions for chainr services."""

from typing import Any, Optional

from dependency_injector import providers
from rich.console import Console


class ConsoleProvider(providers.Provider):  # type: ignore[misc]
    """Provider that returns the registered console instance.

    The rich console is created by the CLI (on stderr, so JSON on stdout stays
    clean) and handed to the container afterwards.
    """

    def __init__(self, console_instance: Optional[Console] = None):
        self._console = console_instance
        super().__init__()

    def _provide(self, args: Any, kwargs: Any) -> Console:
        if self._console is None:
            raise RuntimeError("Console instance not set in provider")
        return self._console

    def set_console(self, console: Console) -> None:
        """Set the console instance."""
        self._console = console
