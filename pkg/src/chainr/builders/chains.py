"""Chain r-matrices for sl(n): full chains, rotations and rotated chains.

Link k of a chain attaches to the highest root θ_k = e_k − e_{n−k+1}:

    ξ_k ( H_k ∧ E_{k,n−k+1} + Σ_{s=k+1}^{n−k} E_{k,s} ∧ E_{s,n−k+1} )

The Cartan symbol H_k is (c/2)(E_kk − E_{n−k+1,n−k+1}) for the normalization
c. With c = 1 the Cartan leg has eigenvalue 1 on E_{k,n−k+1}, which is what the
CYBE needs; c = 2 reproduces the familiar "H_{ij} = E_ii − E_jj" formulas
term-for-term.
"""

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..exceptions import InvalidInputError
from ..lie import (
    LieElement,
    Scalar,
    half_H,
    h_tilde_perp,
    matrix_unit,
    rational,
    require_odd,
)
from ..tensor import BiTensor, wedge

logger = logging.getLogger(__name__)

ParamList = Optional[Sequence[Union[str, Scalar]]]


def link_count(n: int) -> int:
    """Number of chain links, m = ⌊n/2⌋."""
    if n < 3:
        raise InvalidInputError(f"n must be at least 3, got {n}")
    return n // 2


def coerce_params(values: ParamList, count: int, name: str) -> list[Fraction]:
    """Validate a parameter list of the given arity; None means all ones."""
    if values is None:
        return [Fraction(1)] * count
    params = [rational(v) for v in values]
    if len(params) != count:
        raise InvalidInputError(f"{name} needs {count} values, got {len(params)}")
    return params


@dataclass(frozen=True)
class ChainParams:
    """Parameters (ξ, ζ) of the enlarged-chain variety for odd n.

    ξ_1 and every ζ_k are unrestricted; ξ_2, …, ξ_m must be nonzero.
    """

    n: int
    xi: tuple[Fraction, ...]
    zeta: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        m = require_odd(self.n)
        if len(self.xi) != m or len(self.zeta) != m:
            raise InvalidInputError(
                f"n={self.n} needs {m} values of xi and zeta, "
                f"got {len(self.xi)} and {len(self.zeta)}"
            )
        zero_links = [k for k, x in enumerate(self.xi[1:], start=2) if x == 0]
        if zero_links:
            raise InvalidInputError(f"xi_k must be nonzero for k >= 2 (zero at {zero_links})")

    @property
    def m(self) -> int:
        return len(self.xi)

    @classmethod
    def of(cls, n: int, xi: ParamList = None, zeta: ParamList = None) -> "ChainParams":
        m = require_odd(n)
        return cls(
            n=n,
            xi=tuple(coerce_params(xi, m, "xi")),
            zeta=tuple(coerce_params(zeta, m, "zeta")),
        )


def random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    """A random rational p/q with |p| ≤ bound and 1 ≤ q ≤ bound."""
    numerators = [p for p in range(-bound, bound + 1) if p or not nonzero]
    return Fraction(rng.choice(numerators), rng.randint(1, bound))


def sample_chain_params(
    n: int, rng: random.Random, bound: int = 7, nonzero: bool = False
) -> ChainParams:
    """Draw admissible random (ξ, ζ); with ``nonzero`` every parameter is invertible."""
    m = require_odd(n)
    xi = [random_rational(rng, bound, nonzero=nonzero or k > 0) for k in range(m)]
    zeta = [random_rational(rng, bound, nonzero=nonzero) for _ in range(m)]
    return ChainParams(n=n, xi=tuple(xi), zeta=tuple(zeta))


def chain_extension(n: int, k: int) -> BiTensor:
    """Σ_{s=k+1}^{n−k} E_{k,s} ∧ E_{s,n−k+1}."""
    total = BiTensor.zero(n)
    for s in range(k + 1, n - k + 1):
        total = total + wedge(matrix_unit(n, k, s), matrix_unit(n, s, n - k + 1))
    return total


def highest_root_unit(n: int, k: int) -> LieElement:
    """E_{k,n−k+1}."""
    return matrix_unit(n, k, n - k + 1)


def build_chain_with_cartans(
    n: int, cartans: Sequence[LieElement], xi: ParamList = None
) -> BiTensor:
    """Σ_k ξ_k (C_k ∧ E_{k,n−k+1} + extension_k) for explicit link Cartans C_k."""
    links = link_count(n)
    if len(cartans) != links:
        raise InvalidInputError(f"Expected {links} link Cartans, got {len(cartans)}")
    scales = coerce_params(xi, links, "xi")
    total = BiTensor.zero(n)
    for k, (cartan, scale) in enumerate(zip(cartans, scales), start=1):
        if scale:
            link = wedge(cartan, highest_root_unit(n, k)) + chain_extension(n, k)
            total = total + link * scale
    return total


def build_fch(n: int, xi: ParamList = None, normalization: int = 1) -> BiTensor:
    """The full chain of extended Jordanian terms."""
    m = require_odd(n)
    cartans = [half_H(n, k, n - k + 1, normalization) for k in range(1, m + 1)]
    return build_chain_with_cartans(n, cartans, xi)


def build_rotation(n: int, xi: ParamList = None, normalization: int = 1) -> BiTensor:
    """The rotation terms Σ_i ξ_i H̃_i ∧ E_{i,n−i+1}."""
    m = require_odd(n)
    scales = coerce_params(xi, m, "xi")
    if normalization not in (1, 2):
        raise InvalidInputError(f"Normalization must be 1 or 2, got {normalization}")
    factor = Fraction(normalization, 2)
    total = BiTensor.zero(n)
    for i, scale in enumerate(scales, start=1):
        if scale:
            total = total + wedge(h_tilde_perp(n, i), highest_root_unit(n, i)) * (scale * factor)
    return total


def build_rch(n: int, xi: ParamList = None, normalization: int = 1) -> BiTensor:
    """The rotated chain r_fch + r_r."""
    return build_fch(n, xi, normalization) + build_rotation(n, xi, normalization)


def rotated_cartans(n: int, normalization: int = 1) -> list[LieElement]:
    """Link Cartans of the rotated chain, H_{k,n−k+1} + H̃_k in the chosen normalization."""
    m = require_odd(n)
    factor = Fraction(normalization, 2)
    return [
        half_H(n, k, n - k + 1, normalization) + h_tilde_perp(n, k) * factor
        for k in range(1, m + 1)
    ]
