"""Command framework components."""

from .analyze import AnalyzeCommand
from .base import BaseCommand, ExitCode
from .build import BuildCommand
from .registry import CommandRegistry, default_registry
from .roots import RootsCommand
from .solve import SolveCommand
from .verify import VerifyCommand

__all__ = [
    "AnalyzeCommand",
    "BaseCommand",
    "BuildCommand",
    "CommandRegistry",
    "ExitCode",
    "RootsCommand",
    "SolveCommand",
    "VerifyCommand",
    "default_registry",
]
