"""Tests for the service containers."""

from io import StringIO

import pytest
from dependency_injector import providers
from rich.console import Console

from chainr.builders import EnlargementSolver
from chainr.container import (
    ChainrContainer,
    ConsoleProvider,
    SimpleContainer,
    configure_container,
    create_container,
)


class TestSimpleContainer:
    """Test SimpleContainer functionality."""

    def test_registration_and_retrieval(self):
        container = SimpleContainer()
        console = Console(file=StringIO())
        container.register(Console, console)

        assert container.has(Console)
        assert container.get(Console) is console

    def test_factory_called_once(self):
        container = SimpleContainer()
        calls = []

        def make_solver():
            calls.append(1)
            return EnlargementSolver()

        container.register_factory(EnlargementSolver, make_solver)
        assert container.has(EnlargementSolver)
        assert not calls

        first = container.get(EnlargementSolver)
        assert container.get(EnlargementSolver) is first
        assert len(calls) == 1

    def test_missing_service(self):
        container = SimpleContainer()
        container.register(Console, Console(file=StringIO()))

        with pytest.raises(ValueError, match="EnlargementSolver") as info:
            container.get(EnlargementSolver)
        assert "Console" in str(info.value)
        assert container.get_optional(EnlargementSolver) is None

    def test_reset_singletons(self):
        container = SimpleContainer()
        console = Console(file=StringIO())
        container.register(Console, console)
        container.register_factory(EnlargementSolver, EnlargementSolver)
        first = container.get(EnlargementSolver)

        container.reset_singletons()

        assert container.get(Console) is console
        assert container.get(EnlargementSolver) is not first

    def test_clear(self):
        container = SimpleContainer()
        container.register_factory(EnlargementSolver, EnlargementSolver)
        container.clear()
        assert not container.has(EnlargementSolver)


class TestChainrContainer:
    """The dependency-injector application container."""

    def test_solver_is_singleton(self):
        container = create_container()
        assert container.solver() is container.solver()

    def test_console_injection(self):
        container = create_container()
        console = Console(file=StringIO())
        configure_container(container, console=console, config={"sampling": {"bound": 3}})

        assert container.console() is console
        assert container.config.sampling.bound() == 3

    def test_configure_resets_solver(self):
        container = create_container()
        first = container.solver()
        configure_container(container, config={"output": {"indent": 4}})
        assert container.solver() is not first

    def test_console_not_set(self):
        with pytest.raises(RuntimeError, match="Console instance not set"):
            ConsoleProvider()()

    def test_override(self):
        solver = EnlargementSolver()
        container = create_container(solver=providers.Object(solver))
        assert container.solver() is solver

    def test_declarative_class(self):
        assert isinstance(ChainrContainer(), ChainrContainer)
