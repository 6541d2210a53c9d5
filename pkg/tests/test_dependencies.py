"""Tests for project dependencies."""

import importlib.util

import pytest


class TestDependencies:
    """Test project dependencies are available."""

    def test_typing_extensions_available(self) -> None:
        """Test that typing-extensions is available."""
        try:
            import typing_extensions as te

            assert hasattr(te, "Self")
        except ImportError:
            pytest.fail("typing-extensions not available")

    @pytest.mark.parametrize(
        "module", ["yaml", "click", "rich", "dependency_injector", "sympy"]
    )
    def test_core_dependencies_available(self, module: str) -> None:
        """Test that core dependencies are available."""
        if importlib.util.find_spec(module) is None:
            pytest.fail(f"{module} not available")
