"""Base command class for chainr.

Every command returns an ``ExitCode``; ``run()`` turns the exceptions of
``chainr.exceptions`` into the documented codes so scripts can rely on them.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator
from contextlib import contextmanager
from enum import IntEnum
from pathlib import Path
from typing import TYPE_CHECKING, Any, Optional, Union

import click
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskID, TextColumn

from ..builders import EnlargementSolver
from ..config import ChainrConfig, get_config
from ..exceptions import InconsistentSystemError, InvalidInputError
from ..protocols import ICommand
from ..serialization import dumps, write_json

if TYPE_CHECKING:
    from ..container import SimpleContainer

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    CYBE_FAILED = 1
    BAD_INPUT = 2
    INCONSISTENT = 3
    INTERRUPTED = 130


class BaseCommand(ABC, ICommand):
    """Base class for all chainr commands.

    Provides exit-code mapping, console helpers and access to the services of
    the invocation container (console, configuration, solver).

    Example:
        class HelloCommand(BaseCommand):
            def execute(self, n: int = 3) -> int:
                self.print_info(f"sl({n})")
                return ExitCode.OK
    """

    def __init__(self, container: Optional["SimpleContainer"] = None):
        """Initialize the command.

        Args:
            container: Invocation container. Missing services fall back to
                a stderr console, the global config and a private solver.
        """
        self.container = container
        self.console: Console = self._service(Console) or Console(stderr=True)

        self._name = self._generate_default_name()
        self._description = (self.__class__.__doc__ or "No description available").strip()
        self._help_text = self._description

    def _service(self, service_type: type) -> Any:
        if self.container is None or not hasattr(self.container, "get"):
            return None
        try:
            return self.container.get(service_type)
        except Exception:
            return None

    def _generate_default_name(self) -> str:
        class_name = self.__class__.__name__
        if class_name.endswith("Command"):
            class_name = class_name[:-7]
        return class_name.lower().replace("_", "-")

    @property
    def config(self) -> ChainrConfig:
        return self._service(ChainrConfig) or get_config()

    @property
    def solver(self) -> EnlargementSolver:
        solver = self._service(EnlargementSolver)
        if solver is None:
            solver = EnlargementSolver()
            if self.container is not None and hasattr(self.container, "register"):
                self.container.register(EnlargementSolver, solver)
        return solver  # type: ignore[no-any-return]

    @abstractmethod
    def execute(self, *args: Any, **kwargs: Any) -> int:
        """Execute the command logic and return an exit code."""

    def run(self, *args: Any, **kwargs: Any) -> int:
        """Run the command with error handling.

        Returns:
            ``ExitCode.BAD_INPUT`` for invalid input, ``ExitCode.INCONSISTENT``
            when the enlargement conditions have no solution, 130 on
            interrupt, 1 for any other failure.
        """
        try:
            return int(self.execute(*args, **kwargs))
        except KeyboardInterrupt:
            self.console.print("[yellow]\nOperation cancelled by user[/]")
            return ExitCode.INTERRUPTED
        except InvalidInputError as e:
            self.print_error(f"Invalid input: {e}")
            return ExitCode.BAD_INPUT
        except InconsistentSystemError as e:
            self.print_error(f"Inconsistent system: {e}")
            if e.residual is not None:
                logger.debug(f"Inconsistent equation: {e.residual}")
            return ExitCode.INCONSISTENT
        except Exception as e:
            self.console.print(f"[red]Error: {e}[/]")
            logger.debug("Unhandled command failure", exc_info=True)
            return 1

    # UI Helper Methods

    @contextmanager
    def show_progress(
        self, description: str, total: Optional[int] = None
    ) -> Iterator[tuple[Progress, TaskID]]:
        """Spinner (or bar, when ``total`` is given) while an operation runs."""
        columns: list[Any] = [
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
        ]
        if total is not None:
            columns.extend(
                [BarColumn(), TextColumn("[progress.percentage]{task.percentage:>3.0f}%")]
            )

        with Progress(*columns, console=self.console, transient=True) as progress:
            task_id = progress.add_task(description, total=total)
            yield progress, task_id

    def print_success(self, message: str) -> None:
        self.console.print(f"[green]✓[/] {message}")

    def print_error(self, message: str) -> None:
        self.console.print(f"[red]✗[/] {message}")

    def print_warning(self, message: str) -> None:
        self.console.print(f"[yellow]![/] {message}")

    def print_info(self, message: str) -> None:
        self.console.print(f"[blue]ℹ[/] {message}")

    def emit_json(self, payload: Any, out: Optional[Union[str, Path]] = None) -> None:
        """Write a JSON artifact to ``out``, or to stdout when no path is given."""
        indent = self.config.get_config_value("output.indent", 2)
        if out is None:
            click.echo(dumps(payload, indent), nl=False)
            return
        try:
            write_json(out, payload, indent)
        except OSError as e:
            raise InvalidInputError(f"Cannot write {out}: {e}") from e
        self.print_success(f"Wrote {out}")

    # ICommand Protocol Implementation

    @property
    def name(self) -> str:
        return self._name

    @property
    def description(self) -> str:
        return self._description

    @property
    def help_text(self) -> str:
        return self._help_text
