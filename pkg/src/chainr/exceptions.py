"""Exception hierarchy for chainr.

Commands translate these into process exit codes (see ``chainr.commands.base``).
"""

from typing import Any, Optional


class ChainrError(Exception):
    """Base class for all chainr errors."""


class InvalidInputError(ChainrError, ValueError):
    """A precondition on arguments, parameters or input files was violated."""


class NonSkewTensorError(InvalidInputError):
    """A tensor expected to be skew-symmetric is not."""


class UnrecognizedStructureError(InvalidInputError):
    """A tensor does not come from a recognized chain-family builder."""


class InconsistentSystemError(ChainrError):
    """The enlargement conditions have no solution.

    Attributes:
        residual: The equation that reduced to a nonzero constant, if known.
    """

    def __init__(self, message: str, residual: Optional[Any] = None):
        super().__init__(message)
        self.residual = residual
