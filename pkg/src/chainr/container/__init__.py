"""Dependency injection container components.

This module provides two container implementations:
1. SimpleContainer - Type-keyed registry handed to each command
2. ChainrContainer - Application container using dependency-injector
"""

from .base_container import ChainrContainer, configure_container, create_container
from .providers import ConsoleProvider
from .simple_container import SimpleContainer

__all__ = [
    "SimpleContainer",
    "ChainrContainer",
    "create_container",
    "configure_container",
    "ConsoleProvider",
]
