"""The ``build`` command: write a chain-family r-matrix as a JSON artifact."""

import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Optional, Union

from ..builders import build_ech, sample_chain_params
from ..dual import CHAIN_KINDS, ChainSpec, carrier
from ..exceptions import InvalidInputError
from ..lie import rational
from ..serialization import build_document, provenance
from ..tensor import BiTensor
from .base import BaseCommand, ExitCode

if TYPE_CHECKING:
    from ..container import SimpleContainer

logger = logging.getLogger(__name__)

#: Kinds whose formulas use the Cartan normalization.
NORMALIZED_KINDS = ("fch", "rotation", "rch", "dj3")


def parse_params(text: Optional[str]) -> Optional[tuple[Fraction, ...]]:
    """Parse a comma separated list of rationals such as ``"1,-2/3,0"``."""
    if text is None or not text.strip():
        return None
    return tuple(rational(part) for part in text.split(","))


class BuildCommand(BaseCommand):
    """Build a chain-family r-matrix and write it as canonical JSON."""

    def __init__(self, container: Optional["SimpleContainer"] = None):
        super().__init__(container)
        self._help_text = (
            "Build one of the chain r-matrices of sl(n).\n\n"
            f"Kinds: {', '.join(CHAIN_KINDS)}. Parameters are comma separated\n"
            "rationals, e.g. --xi 1,-2/3,5. With --seed, parameters that are not\n"
            "given are drawn at random (reproducibly) from the admissible set;\n"
            "sampling.seed in the config supplies a default seed.\n\n"
            "Example:\n"
            "  chainr build --kind ech --n 11 --seed 3 --out ech11.json"
        )

    def execute(
        self,
        kind: str = "rch",
        n: int = 3,
        xi: Optional[str] = None,
        zeta: Optional[str] = None,
        seed: Optional[int] = None,
        normalization: Optional[int] = None,
        out: Optional[Union[str, Path]] = None,
    ) -> int:
        xi_values = parse_params(xi)
        zeta_values = parse_params(zeta)
        if seed is None:
            seed = self.config.get_config_value("sampling.seed")
        if seed is not None and (xi_values is None or zeta_values is None):
            bound = int(self.config.get_config_value("sampling.bound", 7))
            sampled = sample_chain_params(n, random.Random(seed), bound)
            logger.info(f"Sampled parameters for n={n} with seed {seed}")
            xi_values = xi_values if xi_values is not None else sampled.xi
            zeta_values = zeta_values if zeta_values is not None else sampled.zeta

        c = normalization
        if c is None:
            c = int(self.config.get_config_value("builders.normalization", 1))
        if c not in (1, 2):
            raise InvalidInputError(f"normalization must be 1 or 2, got {c}")

        spec = ChainSpec(
            n=n,
            kind=kind,
            xi=xi_values,
            zeta=zeta_values if kind in ("rJ", "ech") else None,
            normalization=c,
        )
        r = self._build(spec)
        header = provenance(
            kind=kind,
            n=n,
            xi=spec.xi,
            zeta=spec.zeta,
            normalization_c=c if kind in NORMALIZED_KINDS else None,
        )
        if c == 2 and kind in NORMALIZED_KINDS:
            self.print_warning("normalization 2 uses the printed scaling; the CYBE may fail")

        self.emit_json(build_document(r, header), out)
        carrier_ = carrier(r)
        self.print_info(f"{kind} on sl({n}): {len(r)} terms")
        self.print_info(
            f"carrier dim {carrier_.dim}, Borel {'yes' if carrier_.contains_borel else 'no'}"
        )
        return ExitCode.OK

    def _build(self, spec: ChainSpec) -> BiTensor:
        if spec.kind == "ech":
            with self.show_progress(f"Solving enlargement for sl({spec.n})"):
                solution = self.solver.solve(spec.n)
            return build_ech(spec.n, spec.xi, spec.zeta, solution=solution)
        return spec.build()
