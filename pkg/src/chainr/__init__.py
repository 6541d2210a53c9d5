"""chainr - chain r-matrices of sl(n).

Exact rational construction and verification of the chain-family solutions of
the classical Yang-Baxter equation, the linear solver for the Cartan elements
of the enlarged chain, dual-algebra analysis and the highest-root
classification of the classical series.
"""

__version__ = "0.1.0"

from .builders import (
    ChainParams,
    EnlargementSolution,
    EnlargementSolver,
    build_dj_sl3,
    build_E_hat,
    build_ech,
    build_fch,
    build_rch,
    build_rJ,
    build_rotation,
    solve_enlargement,
)
from .commands import BaseCommand, CommandRegistry, ExitCode
from .config import ChainrConfig, find_chainr_directory, get_config, reset_config
from .container import ChainrContainer, SimpleContainer, configure_container, create_container
from .dual import ChainSpec, analyze, assign_gradings, carrier, dual_structure
from .exceptions import (
    ChainrError,
    InconsistentSystemError,
    InvalidInputError,
    NonSkewTensorError,
    UnrecognizedStructureError,
)
from .lie import LieElement, RootVector, format_rational, rational
from .protocols import ICommand
from .roots import classify_type, root_system, theta_filtration
from .tensor import BiTensor, TriTensor, cobracket, is_cybe_solution, schouten, wedge

__all__ = [
    "__version__",
    # Scalars and tensors
    "LieElement",
    "RootVector",
    "rational",
    "format_rational",
    "BiTensor",
    "TriTensor",
    "wedge",
    "schouten",
    "cobracket",
    "is_cybe_solution",
    # Roots
    "root_system",
    "theta_filtration",
    "classify_type",
    # Builders
    "ChainParams",
    "EnlargementSolution",
    "EnlargementSolver",
    "build_fch",
    "build_rotation",
    "build_rch",
    "build_E_hat",
    "build_rJ",
    "build_ech",
    "build_dj_sl3",
    "solve_enlargement",
    # Dual analysis
    "ChainSpec",
    "carrier",
    "dual_structure",
    "assign_gradings",
    "analyze",
    # Commands
    "ICommand",
    "BaseCommand",
    "CommandRegistry",
    "ExitCode",
    # Container
    "SimpleContainer",
    "ChainrContainer",
    "create_container",
    "configure_container",
    # Configuration
    "ChainrConfig",
    "get_config",
    "reset_config",
    "find_chainr_directory",
    # Errors
    "ChainrError",
    "InvalidInputError",
    "NonSkewTensorError",
    "UnrecognizedStructureError",
    "InconsistentSystemError",
]
