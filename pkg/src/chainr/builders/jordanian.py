"""Additional Jordanian terms on the mutually orthogonal roots α_{2k−1}.

For odd n = 2m+1 the k-th term is ζ_k H_k^⊥ ∧ Ê_k(ξ), where

    Ê_l(ξ) = E_{2l,2l−1} + (ξ̃_{2l−1} / ξ̃_{2l}) E_{n+1−2l,n+2−2l}

with ξ̃_a = ξ_a for a ≤ m, ξ̃_{m+1} = 1 and ξ̃_a = 1/ξ_{n+1−a} for a > m+1.
The coordinate Ê_p with p = (m+1)/2 (m odd) or (m+2)/2 (m even) has no second
summand.
"""

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from ..exceptions import InvalidInputError
from ..lie import LieElement, Scalar, h_perp, matrix_unit, rational, require_odd
from ..tensor import BiTensor, wedge
from .chains import ParamList, coerce_params

logger = logging.getLogger(__name__)

# a pair (numerator, denominator) standing for a possibly infinite ratio
_Projective = tuple[Fraction, Fraction]


def lone_index(n: int) -> int:
    """The index p of the single-term coordinate Ê_p."""
    m = require_odd(n)
    return (m + 1) // 2 if m % 2 == 1 else (m + 2) // 2


def _xi_tilde(xi: Sequence[Fraction], a: int) -> _Projective:
    m = len(xi)
    if a <= m:
        return xi[a - 1], Fraction(1)
    if a == m + 1:
        return Fraction(1), Fraction(1)
    return Fraction(1), xi[2 * m + 1 - a]


def e_hat_ratio(
    n: int, xi: ParamList, l: int, indeterminate: Optional[Scalar] = None
) -> Fraction:
    """Coefficient ξ̃_{2l−1}/ξ̃_{2l} of the second summand of Ê_l.

    Args:
        n: Odd matrix size.
        xi: Chain parameters (defaults to all ones).
        l: Coordinate index, 1..m.
        indeterminate: Value used when the ratio degenerates to 0/0.

    Raises:
        InvalidInputError: If the ratio has a zero denominator and nonzero
            numerator, or is 0/0 without an ``indeterminate`` value.
    """
    m = require_odd(n)
    if not 1 <= l <= m:
        raise InvalidInputError(f"l must be in 1..{m}, got {l}")
    params = coerce_params(xi, m, "xi")
    top_num, top_den = _xi_tilde(params, 2 * l - 1)
    bottom_num, bottom_den = _xi_tilde(params, 2 * l)
    numerator = top_num * bottom_den
    denominator = top_den * bottom_num
    if denominator:
        return numerator / denominator
    if numerator or indeterminate is None:
        raise InvalidInputError(
            f"Coefficient of the second summand of E_hat_{l} is undefined for xi={params}"
        )
    logger.debug(f"E_hat_{l}: 0/0 ratio resolved to {indeterminate}")
    return rational(indeterminate)


def build_E_hat(
    n: int, xi: ParamList = None, indeterminate: Optional[Scalar] = None
) -> list[LieElement]:
    """The Jordanian root coordinates Ê_1(ξ), …, Ê_m(ξ)."""
    m = require_odd(n)
    p = lone_index(n)
    coordinates = []
    for l in range(1, m + 1):
        element = matrix_unit(n, 2 * l, 2 * l - 1)
        if l != p:
            ratio = e_hat_ratio(n, xi, l, indeterminate)
            if ratio:
                element = element + matrix_unit(n, n + 1 - 2 * l, n + 2 - 2 * l) * ratio
        coordinates.append(element)
    return coordinates


def jordanian_cartans(n: int) -> list[LieElement]:
    """H_1^⊥, …, H_m^⊥."""
    m = require_odd(n)
    return [h_perp(n, k) for k in range(1, m + 1)]


def build_rJ(
    n: int,
    zeta: ParamList = None,
    xi: ParamList = None,
    indeterminate: Optional[Scalar] = None,
) -> BiTensor:
    """Σ_k ζ_k H_k^⊥ ∧ Ê_k(ξ)."""
    m = require_odd(n)
    scales = coerce_params(zeta, m, "zeta")
    total = BiTensor.zero(n)
    coordinates = build_E_hat(n, xi, indeterminate)
    for cartan, coordinate, scale in zip(jordanian_cartans(n), coordinates, scales):
        if scale:
            total = total + wedge(cartan, coordinate) * scale
    return total


def build_dj_sl3() -> BiTensor:
    """The deformed Jordanian H^⊥ ∧ (E_21 + 2E_13) of sl(3)."""
    return wedge(h_perp(3, 1), matrix_unit(3, 2, 1) + matrix_unit(3, 1, 3) * 2)
