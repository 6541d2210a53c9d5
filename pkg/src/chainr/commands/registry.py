"""Command registry for managing command registration and discovery."""

from typing import Any, Optional

from ..protocols import ICommand


class CommandRegistry:
    """Registry for managing command classes."""

    def __init__(self) -> None:
        self._commands: dict[str, type[ICommand]] = {}

    def register(self, command_class: type[ICommand], name: Optional[str] = None) -> None:
        """
        Register a command class.

        Args:
            command_class: The command class to register
            name: Optional name override (uses command.name if not provided)
        """
        if name:
            cmd_name = name
        else:
            try:
                cmd_name = command_class(None).name  # type: ignore[call-arg]
            except Exception:
                cmd_name = command_class.__name__.lower().replace("command", "")

        self._commands[cmd_name] = command_class

    def unregister(self, name: str) -> None:
        self._commands.pop(name, None)

    def get(self, name: str) -> Optional[type[ICommand]]:
        return self._commands.get(name)

    def list_commands(self) -> list[str]:
        return list(self._commands.keys())

    def get_all(self) -> dict[str, type[ICommand]]:
        return self._commands.copy()

    def clear(self) -> None:
        self._commands.clear()

    def create_command(self, name: str, container: Any) -> Optional[ICommand]:
        """
        Create a command instance by name.

        Args:
            name: The command name
            container: Invocation container

        Returns:
            Command instance or None if not found
        """
        command_class = self.get(name)
        if command_class:
            return command_class(container)  # type: ignore[call-arg]
        return None


def default_registry() -> CommandRegistry:
    """The built-in commands."""
    from .analyze import AnalyzeCommand
    from .build import BuildCommand
    from .roots import RootsCommand
    from .solve import SolveCommand
    from .verify import VerifyCommand

    registry = CommandRegistry()
    for command_class in (BuildCommand, VerifyCommand, SolveCommand, AnalyzeCommand, RootsCommand):
        registry.register(command_class)
    return registry
