"""Builders for the chain r-matrix families of sl(n)."""

from .automorphism import (
    apply_chain_automorphism,
    chain_zone_scales,
    printed_zeta_zones,
    zone_divergence,
)
from .chains import (
    ChainParams,
    build_chain_with_cartans,
    build_fch,
    build_rch,
    build_rotation,
    chain_extension,
    sample_chain_params,
)
from .jordanian import build_dj_sl3, build_E_hat, build_rJ, lone_index
from .solver import (
    EnlargementSolution,
    EnlargementSolver,
    build_ech,
    rch_with_solved_cartans,
    solve_enlargement,
    switch_off_jordanian,
    switch_off_sequence,
)

__all__ = [
    "ChainParams",
    "EnlargementSolution",
    "EnlargementSolver",
    "apply_chain_automorphism",
    "build_E_hat",
    "build_chain_with_cartans",
    "build_dj_sl3",
    "build_ech",
    "build_fch",
    "build_rJ",
    "build_rch",
    "build_rotation",
    "chain_extension",
    "chain_zone_scales",
    "lone_index",
    "printed_zeta_zones",
    "rch_with_solved_cartans",
    "sample_chain_params",
    "solve_enlargement",
    "switch_off_jordanian",
    "switch_off_sequence",
    "zone_divergence",
]
