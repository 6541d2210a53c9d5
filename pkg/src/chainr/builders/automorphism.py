"""Carrier automorphisms that move the enlarged chain through its (ξ, ζ) variety.

Every zone map is a diagonal conjugation E_ab ↦ (s_a / s_b) E_ab, so it is a
Lie-algebra automorphism that fixes the Cartan subalgebra. The ξ-zones rescale
link i alone; the ζ-zones are symmetric blocks [c, n+1−c], which leave every
chain link untouched and rescale a single Jordanian coordinate Ê_l.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exceptions import InvalidInputError
from ..lie import Index, require_odd
from ..tensor import BiTensor
from .chains import ParamList, coerce_params
from .jordanian import lone_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Zone:
    """Positions whose scale s_a is multiplied by parameter**power."""

    family: str
    index: int
    positions: frozenset[int]
    power: int

    @property
    def parameter(self) -> str:
        return f"{self.family}_{self.index}"

    def exponent(self, unit: Index) -> int:
        """Exponent of the parameter picked up by the matrix unit E_ab."""
        a, b = unit
        return self.power * (int(a in self.positions) - int(b in self.positions))


@dataclass(frozen=True)
class PrintedZone:
    """Rows × columns of upper-triangular units rescaled by parameter**sign."""

    family: str
    index: int
    rows: range
    cols: range
    sign: int

    @property
    def parameter(self) -> str:
        return f"{self.family}_{self.index}"


@dataclass(frozen=True)
class ZoneDivergence:
    parameter: str
    unit: Index
    derived: int
    printed: int


def _span(first: int, last: int) -> frozenset[int]:
    return frozenset(range(first, last + 1))


def xi_zones(n: int) -> list[Zone]:
    """Odd i: positions i..n−i; even i: positions 1..i and n+2−i..n."""
    m = require_odd(n)
    zones = []
    for i in range(1, m + 1):
        if i % 2 == 1:
            positions = _span(i, n - i)
        else:
            positions = _span(1, i) | _span(n + 2 - i, n)
        zones.append(Zone("xi", i, positions, 1))
    return zones


def _mirror_rep(n: int, a: int) -> int:
    return min(a, n + 1 - a)


def zeta_zones(n: int) -> list[Zone]:
    """One symmetric block per Jordanian coordinate.

    Positions a and n+1−a share the representative min(a, n+1−a). The pair
    (2l−1, 2l) joins two consecutive representatives; with c the larger one,
    scaling the block [c, n+1−c] changes s_{2l}/s_{2l−1} and no other
    Jordanian or chain ratio.
    """
    m = require_odd(n)
    zones = []
    for l in range(1, m + 1):
        low, high = _mirror_rep(n, 2 * l - 1), _mirror_rep(n, 2 * l)
        c = max(low, high)
        power = 1 if high == c else -1
        zones.append(Zone("zeta", l, _span(c, n + 1 - c), power))
    return zones


def chain_zone_scales(n: int, xi: ParamList = None, zeta: ParamList = None) -> list[Fraction]:
    """Diagonal scales s_1..s_n of the conjugation taking the unit-parameter chain to (ξ, ζ).

    Raises:
        InvalidInputError: If a parameter is zero (its zone needs an inverse).
    """
    m = require_odd(n)
    xi_values = coerce_params(xi, m, "xi")
    zeta_values = coerce_params(zeta, m, "zeta")
    scales = [Fraction(1)] * (n + 1)  # 1-based; slot 0 unused

    def apply(zone: Zone, value: Fraction) -> None:
        if not value:
            raise InvalidInputError(f"Zone of {zone.parameter} needs a nonzero value")
        factor = value if zone.power > 0 else 1 / value
        for a in zone.positions:
            scales[a] *= factor

    for zone, value in zip(xi_zones(n), xi_values):
        apply(zone, value)
    # the ξ-zones may already rescale E_{2l,2l−1}; the ζ-zone supplies the rest
    carried = [scales[2 * l] / scales[2 * l - 1] for l in range(1, m + 1)]
    for zone, value, mu in zip(zeta_zones(n), zeta_values, carried):
        apply(zone, value / mu if value else value)
    return scales[1:]


def apply_chain_automorphism(
    r: BiTensor, xi: ParamList = None, zeta: ParamList = None
) -> BiTensor:
    """Rescale every leg E_ab of r by s_a/s_b; diagonal legs are fixed."""
    scales = [Fraction(1)] + chain_zone_scales(r.n, xi, zeta)
    terms = {}
    for key, value in r.items():
        factor = Fraction(1)
        for a, b in key:
            factor *= scales[a] / scales[b]
        terms[key] = value * factor
    return BiTensor(r.n, terms)


def printed_xi_zones(n: int) -> list[PrintedZone]:
    """The ξ-zones as tabulated: ξ_i on the first block, ξ_i^{−1} on the second."""
    m = require_odd(n)
    zones = []
    for i in range(1, m + 1):
        if i % 2 == 1:
            zones.append(PrintedZone("xi", i, range(i, n - i + 1), range(n + 1 - i, n + 1), 1))
            zones.append(PrintedZone("xi", i, range(1, i), range(i, n - i + 1), -1))
        else:
            zones.append(PrintedZone("xi", i, range(1, i + 1), range(i + 1, n + 2 - i), 1))
            zones.append(PrintedZone("xi", i, range(i + 1, n + 2 - i), range(n + 2 - i, n + 1), -1))
    return zones


def printed_zeta_zones(n: int) -> list[PrintedZone]:
    """The ζ-zones as tabulated, split at i = (m+1)/2."""
    m = require_odd(n)
    zones = []
    for i in range(1, m + 1):
        if 2 * i <= m + 1:
            middle = range(2 * i, n - 2 * i + 2)
            zones.append(PrintedZone("zeta", i, middle, range(n - 2 * i + 2, n + 1), 1))
            zones.append(PrintedZone("zeta", i, range(1, 2 * i), middle, -1))
        else:
            middle = range(n - 2 * i + 2, 2 * i)
            zones.append(PrintedZone("zeta", i, range(1, n - 2 * i + 2), middle, 1))
            zones.append(PrintedZone("zeta", i, middle, range(2 * i, n + 1), -1))
    return zones


def _printed_exponent(zones: list[PrintedZone], parameter: str, unit: Index) -> int:
    a, b = unit
    if a > b:
        return -_printed_exponent(zones, parameter, (b, a))
    return sum(
        zone.sign
        for zone in zones
        if zone.parameter == parameter and a in zone.rows and b in zone.cols
    )


def carrier_units(n: int) -> list[Index]:
    """Off-diagonal units of the enlarged-chain carrier: n_+ and the Ê components."""
    m = require_odd(n)
    units = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    p = lone_index(n)
    for l in range(1, m + 1):
        units.append((2 * l, 2 * l - 1))
        if l != p:
            units.append((n + 1 - 2 * l, n + 2 - 2 * l))
    return sorted(set(units))


def zone_divergence(n: int, units: Optional[list[Index]] = None) -> list[ZoneDivergence]:
    """Units on which the derived zone maps and the printed tables disagree."""
    derived = xi_zones(n) + zeta_zones(n)
    printed = printed_xi_zones(n) + printed_zeta_zones(n)
    divergences = []
    for unit in units if units is not None else carrier_units(n):
        for zone in derived:
            expected = _printed_exponent(printed, zone.parameter, unit)
            actual = zone.exponent(unit)
            if expected != actual:
                divergences.append(ZoneDivergence(zone.parameter, unit, actual, expected))
    if divergences:
        logger.warning(f"sl({n}): {len(divergences)} zone entries differ from the printed tables")
    return divergences
