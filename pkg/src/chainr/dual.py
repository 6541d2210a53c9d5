"""The dual Lie bialgebra g^#(r) of an r-matrix on sl(n).

The dual bracket is read off the cobracket: [f, g]_#(x) = (f ⊗ g)(δ_r(x)). It
is computed in a basis adapted to the carrier, so the duals of the carrier
("blue") and of a complement ("red") can be told apart. For the chains the
complement Cartan part is taken orthogonal to the chain roots θ_s; the other
chain-family kinds use the trace-orthogonal complement. Gradings live in the
root lattice modulo the weight differences of r (``GradingGroup``).

Coordinates on sl(n) ("standard coordinates") use the off-diagonal units
``(i, j)`` together with ``(0, c)`` for the coefficient of H_{c,c+1}.
"""

import logging
from abc import ABC, abstractmethod
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Optional

import sympy

from .builders import (
    build_dj_sl3,
    build_E_hat,
    build_ech,
    build_fch,
    build_rch,
    build_rJ,
    build_rotation,
)
from .builders.chains import link_count, rotated_cartans
from .builders.jordanian import jordanian_cartans
from .exceptions import InvalidInputError, UnrecognizedStructureError
from .lie import (
    Index,
    LieElement,
    RootVector,
    bracket,
    cartan_coordinates,
    cartan_H,
    diagonal,
    from_cartan_coordinates,
    h_perp,
    h_tilde_perp,
    half_H,
    hat_H_closed,
    theta,
)
from .linalg import EchelonBasis, SparseRow
from .tensor import BiTensor, cobracket

logger = logging.getLogger(__name__)

BLUE = "blue"
RED = "red"

CHAIN_KINDS = ("fch", "rotation", "rch", "rJ", "ech", "dj3")

StdKey = tuple[int, int]


def _std_order(key: StdKey) -> tuple[bool, StdKey]:
    # root units pivot before Cartan coordinates
    return key[0] == 0, key


def _to_std(element: LieElement) -> SparseRow:
    row = SparseRow((key, v) for key, v in element.items() if key[0] != key[1])
    if any(i == j for i, j in element.entries):
        part = diagonal(element.n, element.diagonal())
        for c, value in enumerate(cartan_coordinates(part), start=1):
            if value:
                row[(0, c)] = value
    return row


def _from_std(n: int, row: Mapping[StdKey, Fraction]) -> LieElement:
    off = LieElement(n, {k: v for k, v in row.items() if k[0] != 0})
    coords = [row.get((0, c), Fraction(0)) for c in range(1, n)]
    return off + from_cartan_coordinates(n, coords)


def _unit_std(n: int, unit: Index) -> SparseRow:
    """Standard coordinates of E_ij, with E_ii read as E_ii − I/n."""
    i, j = unit
    if i != j:
        return SparseRow({unit: 1})
    return SparseRow(((0, c), Fraction(int(c >= i)) - Fraction(c, n)) for c in range(1, n))


def unit_label(unit: Index) -> str:
    return f"E_{unit[0]}_{unit[1]}"


@dataclass(frozen=True)
class Carrier:
    """The smallest subalgebra of sl(n) containing every tensor leg of r."""

    n: int
    basis: tuple[LieElement, ...]
    contains_borel: bool
    contains_cartan: bool
    negative_intersection_dim: int
    echelon: EchelonBasis = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, element: LieElement) -> bool:
        return self.echelon.contains(_to_std(element))

    def root_units(self) -> list[Index]:
        """Off-diagonal units lying in the carrier."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if i != j and self.echelon.contains({(i, j): 1})
        ]

    def cartan_part(self) -> list[LieElement]:
        """A basis of the carrier's intersection with the diagonal."""
        return [
            _from_std(self.n, self.echelon.row(p))
            for p in self.echelon.pivots
            if p[0] == 0
        ]

    def is_graded(self) -> bool:
        """Whether the carrier is spanned by root units and diagonal elements."""
        return len(self.root_units()) + len(self.cartan_part()) == self.dim


def tensor_legs(r: BiTensor) -> list[LieElement]:
    """Contractions of r against each left and each right unit."""
    by_left: dict[Index, dict[Index, Fraction]] = defaultdict(dict)
    by_right: dict[Index, dict[Index, Fraction]] = defaultdict(dict)
    for (left, right), value in r.items():
        by_left[left][right] = value
        by_right[right][left] = value
    return [LieElement(r.n, entries) for entries in [*by_left.values(), *by_right.values()]]


def carrier(r: BiTensor) -> Carrier:
    """Close the span of the tensor legs under the bracket."""
    n = r.n
    echelon = EchelonBasis(order=_std_order)
    elements: list[LieElement] = []
    queue: list[LieElement] = []
    for leg in tensor_legs(r):
        if echelon.add(_to_std(leg)):
            elements.append(leg)
            queue.append(leg)
    while queue:
        x = queue.pop()
        for y in list(elements):
            z = bracket(x, y)
            if not z.is_zero() and echelon.add(_to_std(z)):
                elements.append(z)
                queue.append(z)
    logger.debug(f"Carrier of a {len(r)}-term tensor on sl({n}) has dimension {len(echelon)}")

    upper = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    contains_cartan = all(echelon.contains({(0, c): 1}) for c in range(1, n))
    contains_borel = contains_cartan and all(echelon.contains({u: 1}) for u in upper)

    combined = EchelonBasis(order=_std_order)
    combined.extend(echelon.rows())
    combined.extend({(j, i): 1} for i, j in upper)
    negative = len(echelon) + len(upper) - len(combined)

    basis = tuple(_from_std(n, row) for row in echelon.rows())
    return Carrier(
        n=n,
        basis=basis,
        contains_borel=contains_borel,
        contains_cartan=contains_cartan,
        negative_intersection_dim=negative,
        echelon=echelon,
    )


class AdaptedBasis(ABC):
    """A basis of sl(n) split into a carrier part and a complement.

    Graded carriers use root units, a few fixed root combinations and Cartan
    elements on both sides; other carriers use their reduced echelon rows
    (``V_k``) and the standard coordinate vectors off the pivots as the
    complement.
    """

    def __init__(
        self,
        carrier_: Carrier,
        labels: list[str],
        elements: dict[str, LieElement],
        carrier_labels: set[str],
        graded: bool,
    ):
        self.carrier = carrier_
        self.n = carrier_.n
        self.labels = labels
        self.elements = elements
        self.carrier_labels = carrier_labels
        self.graded = graded
        self._unit_cache: dict[Index, dict[str, Fraction]] = {}

    def unit_coordinates(self, unit: Index) -> dict[str, Fraction]:
        if unit not in self._unit_cache:
            self._unit_cache[unit] = self._resolve(_unit_std(self.n, unit))
        return self._unit_cache[unit]

    def coordinates(self, element: LieElement) -> dict[str, Fraction]:
        total: dict[str, Fraction] = defaultdict(Fraction)
        for unit, value in element.items():
            for label, c in self.unit_coordinates(unit).items():
                total[label] += value * c
        return {label: c for label, c in total.items() if c}

    @abstractmethod
    def _resolve(self, vector: SparseRow) -> dict[str, Fraction]:
        """Coordinates of a vector given in standard coordinates."""


def _lead_unit(element: LieElement) -> Optional[Index]:
    """The unit a root combination is indexed by: its first negative unit, else its first one."""
    units = sorted(key for key in element.entries if key[0] != key[1])
    if not units:
        return None
    negative = [key for key in units if key[0] > key[1]]
    return negative[0] if negative else units[0]


def _weight(element: LieElement) -> RootVector:
    unit = _lead_unit(element)
    if unit is None:
        return RootVector.zero(element.n)
    return RootVector.root(element.n, *unit)


class _GradedBasis(AdaptedBasis):
    def __init__(
        self,
        carrier_: Carrier,
        cartan_basis: Sequence[LieElement],
        complement: Sequence[LieElement],
        combinations: Optional[Mapping[str, LieElement]] = None,
    ):
        n = carrier_.n
        combinations = dict(combinations or {})
        inside = carrier_.root_units()
        inside_units = set(inside)
        self._combos: dict[str, tuple[Index, Fraction, list[tuple[Index, Fraction]]]] = {}
        for label, element in combinations.items():
            lead = _lead_unit(element)
            if lead is None or any(i == j for i, j in element.entries):
                raise InvalidInputError(f"Root combination {label} must be off-diagonal")
            if lead in inside_units:
                raise InvalidInputError(f"Root combination {label} leads with carrier unit {lead}")
            rest = [(unit, value) for unit, value in sorted(element.items()) if unit != lead]
            self._combos[label] = (lead, element.entry(*lead), rest)
        leads = {lead for lead, _, _ in self._combos.values()}
        for label, (_, _, rest) in self._combos.items():
            if any(unit in leads for unit, _ in rest):
                raise InvalidInputError(f"Root combination {label} overlaps another combination")

        outside = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and (i, j) not in inside_units and (i, j) not in leads
        ]
        blue_combos = [label for label, e in combinations.items() if carrier_.contains(e)]
        red_combos = [label for label in combinations if label not in blue_combos]

        cartans = [*cartan_basis, *complement]
        if len(cartans) != n - 1:
            raise InvalidInputError(
                f"Cartan parts of sizes {len(cartan_basis)} + {len(complement)} do not span sl({n})"
            )
        if not all(carrier_.contains(h) for h in cartan_basis):
            raise InvalidInputError("Carrier Cartan elements do not lie in the carrier")
        if len(inside) + len(blue_combos) + len(cartan_basis) != carrier_.dim:
            raise InvalidInputError(
                f"Units, combinations and Cartans do not span the {carrier_.dim}-dimensional carrier"
            )
        columns = [[sympy.Rational(x) for x in cartan_coordinates(h)] for h in cartans]
        matrix = sympy.Matrix(columns).T
        if matrix.rank() != n - 1:
            raise InvalidInputError("Carrier and complement Cartan parts are not independent")
        inverse = matrix.inv()
        self._inverse = [
            [Fraction(int(inverse[a, b].p), int(inverse[a, b].q)) for b in range(n - 1)]
            for a in range(n - 1)
        ]
        self._cartan_labels = [f"Hc_{k}" for k in range(1, len(cartan_basis) + 1)] + [
            f"Hp_{k}" for k in range(1, len(complement) + 1)
        ]

        labels = [unit_label(u) for u in inside] + blue_combos
        labels += self._cartan_labels[: len(cartan_basis)]
        carrier_labels = set(labels)
        labels += [unit_label(u) for u in outside] + red_combos
        labels += self._cartan_labels[len(cartan_basis) :]
        elements = {unit_label(u): LieElement(n, {u: 1}) for u in [*inside, *outside]}
        elements.update(combinations)
        elements.update(zip(self._cartan_labels, cartans))
        super().__init__(carrier_, labels, elements, carrier_labels, graded=True)

    def _resolve(self, vector: SparseRow) -> dict[str, Fraction]:
        result: dict[str, Fraction] = {}
        units = {key: value for key, value in vector.items() if key[0] != 0}
        for label, (lead, lead_value, rest) in self._combos.items():
            value = units.pop(lead, Fraction(0))
            if not value:
                continue
            coefficient = value / lead_value
            result[label] = coefficient
            for unit, part in rest:
                units[unit] = units.get(unit, Fraction(0)) - coefficient * part
        for key, value in units.items():
            if value:
                result[unit_label(key)] = value
        cartan = [vector[(0, c)] for c in range(1, self.n)]
        if any(cartan):
            for label, row in zip(self._cartan_labels, self._inverse):
                value = sum((a * b for a, b in zip(row, cartan)), Fraction(0))
                if value:
                    result[label] = value
        return result


class _PivotBasis(AdaptedBasis):
    def __init__(self, carrier_: Carrier):
        n = carrier_.n
        echelon = carrier_.echelon
        self._pivots = echelon.pivots
        self._rows = [echelon.row(p) for p in self._pivots]
        self._row_labels = [f"V_{k}" for k in range(1, len(self._pivots) + 1)]
        keys = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        keys += [(0, c) for c in range(1, n)]
        self._free = [key for key in keys if not echelon.has_pivot(key)]
        self._free_labels = [
            f"Hp_{key[1]}" if key[0] == 0 else unit_label(key) for key in self._free
        ]
        elements = {label: _from_std(n, row) for label, row in zip(self._row_labels, self._rows)}
        for key, label in zip(self._free, self._free_labels):
            if key[0] == 0:
                elements[label] = cartan_H(n, key[1], key[1] + 1)
            else:
                elements[label] = LieElement(n, {key: 1})
        super().__init__(
            carrier_,
            self._row_labels + self._free_labels,
            elements,
            set(self._row_labels),
            graded=False,
        )

    def _resolve(self, vector: SparseRow) -> dict[str, Fraction]:
        result: dict[str, Fraction] = {}
        residual = SparseRow(vector)
        for label, pivot, row in zip(self._row_labels, self._pivots, self._rows):
            coefficient = vector[pivot]
            if coefficient:
                result[label] = coefficient
                residual.iadd_coef(-coefficient, row)
        for label, key in zip(self._free_labels, self._free):
            if residual[key]:
                result[label] = residual[key]
        return result


def trace_orthogonal_complement(n: int, cartan_part: Sequence[LieElement]) -> list[LieElement]:
    """Diagonal elements trace-orthogonal to the given ones."""
    rows = [[sympy.Integer(1)] * n]
    rows.extend([sympy.Rational(v) for v in h.diagonal()] for h in cartan_part)
    return _diagonal_nullspace(n, rows)


def theta_orthogonal_complement(n: int, links: Iterable[int]) -> list[LieElement]:
    """h_⊥: diagonal elements on which θ_s vanishes for the given links s."""
    rows = [[sympy.Integer(1)] * n]
    for s in links:
        rows.append([sympy.Integer(c) for c in theta(n, s).coords])
    return _diagonal_nullspace(n, rows)


def _diagonal_nullspace(n: int, rows: list[list[Any]]) -> list[LieElement]:
    null = sympy.Matrix(rows).nullspace()
    elements = []
    for vector in null:
        values = [Fraction(int(sympy.Rational(x).p), int(sympy.Rational(x).q)) for x in vector]
        elements.append(diagonal(n, values))
    return elements


def adapted_basis(
    carrier_: Carrier,
    cartan_basis: Optional[Sequence[LieElement]] = None,
    complement: Optional[Sequence[LieElement]] = None,
) -> AdaptedBasis:
    if not carrier_.is_graded():
        logger.warning(
            f"Carrier of dimension {carrier_.dim} is not spanned by root units and Cartans; "
            "using echelon rows and pivot complements"
        )
        return _PivotBasis(carrier_)
    part = list(cartan_basis) if cartan_basis is not None else carrier_.cartan_part()
    rest = (
        list(complement)
        if complement is not None
        else trace_orthogonal_complement(carrier_.n, part)
    )
    return _GradedBasis(carrier_, part, rest)


def _unit_weight(n: int, unit: Index) -> RootVector:
    return RootVector.zero(n) if unit[0] == unit[1] else RootVector.root(n, *unit)


def _lattice_row(vector: RootVector) -> SparseRow:
    return SparseRow(enumerate(vector.coords))


class GradingGroup:
    """The root lattice modulo the differences of the weights of r's terms.

    A term E_u ⊗ E_v has weight root(u) + root(v), diagonal units counting 0.
    A chain tensor mixes the weights θ_1, …, θ_m, so it is homogeneous, and the
    dual bracket graded, only once those weights are identified. ``degree`` is
    the common weight of r in the quotient.
    """

    def __init__(self, n: int, weights: Iterable[RootVector]):
        self.n = n
        ordered = sorted(set(weights), key=lambda w: w.coords)
        self.degree = ordered[-1] if ordered else RootVector.zero(n)
        self._relations = EchelonBasis()
        for w in ordered:
            self._relations.add(_lattice_row(w - self.degree))

    @classmethod
    def of(cls, r: BiTensor) -> "GradingGroup":
        return cls(
            r.n,
            (_unit_weight(r.n, left) + _unit_weight(r.n, right) for (left, right), _ in r.items()),
        )

    @property
    def rank(self) -> int:
        """Number of independent weight relations."""
        return len(self._relations)

    def equivalent(self, a: RootVector, b: RootVector) -> bool:
        return self._relations.contains(_lattice_row(a - b))

    def is_homogeneous(self, element: LieElement) -> bool:
        weights = [_unit_weight(element.n, unit) for unit in element.entries]
        return all(self.equivalent(w, weights[0]) for w in weights[1:])


Structure = dict[tuple[str, str], dict[str, Fraction]]


@dataclass(frozen=True)
class DualAlgebra:
    """Structure constants of g^#(r) over the duals of an adapted basis.

    ``structure`` holds [x*, y*] for label pairs in basis order; labels carry
    no star. ``gradings`` and ``grading_group`` are populated by
    ``assign_gradings``.
    """

    n: int
    labels: tuple[str, ...]
    structure: Structure
    color: dict[str, str]
    basis: AdaptedBasis = field(repr=False, compare=False)
    gradings: Optional[dict[str, RootVector]] = None
    grading_group: Optional[GradingGroup] = field(default=None, repr=False, compare=False)

    @property
    def generators(self) -> list[str]:
        return [f"{label}*" for label in self.labels]

    def blue(self) -> list[str]:
        return [label for label in self.labels if self.color[label] == BLUE]

    def red(self) -> list[str]:
        return [label for label in self.labels if self.color[label] == RED]

    def bracket(self, x: str, y: str) -> dict[str, Fraction]:
        if x == y:
            return {}
        order = {label: k for k, label in enumerate(self.labels)}
        if order[x] < order[y]:
            return dict(self.structure.get((x, y), {}))
        return {z: -c for z, c in self.structure.get((y, x), {}).items()}

    def bracket_linear(self, x: str, combination: Mapping[str, Fraction]) -> dict[str, Fraction]:
        total: dict[str, Fraction] = defaultdict(Fraction)
        for y, a in combination.items():
            for z, c in self.bracket(x, y).items():
                total[z] += a * c
        return {z: c for z, c in total.items() if c}

    def images(self) -> dict[str, list[tuple[str, str]]]:
        """For every label z, the pairs (x, y) with z* in [x*, y*]."""
        found: dict[str, list[tuple[str, str]]] = defaultdict(list)
        for pair, result in self.structure.items():
            for z in result:
                found[z].append(pair)
        return found


def _structure(r: BiTensor, basis: AdaptedBasis) -> Structure:
    order = {label: k for k, label in enumerate(basis.labels)}
    table: dict[tuple[str, str], dict[str, Fraction]] = defaultdict(dict)
    for z in basis.labels:
        delta = cobracket(r, basis.elements[z])
        expansion: dict[tuple[str, str], Fraction] = defaultdict(Fraction)
        for (left, right), value in delta.items():
            for x, a in basis.unit_coordinates(left).items():
                for y, b in basis.unit_coordinates(right).items():
                    expansion[(x, y)] += value * a * b
        for (x, y), value in expansion.items():
            if value and order[x] < order[y]:
                table[(x, y)][z] = value
    return dict(table)


def _dual(r: BiTensor, basis: AdaptedBasis) -> DualAlgebra:
    color = {label: BLUE if label in basis.carrier_labels else RED for label in basis.labels}
    return DualAlgebra(
        n=r.n,
        labels=tuple(basis.labels),
        structure=_structure(r, basis),
        color=color,
        basis=basis,
    )


def dual_structure(
    r: BiTensor, cartan_complement: Optional[Sequence[LieElement]] = None
) -> DualAlgebra:
    """Dual structure constants [f, g]_#(x) = (f ⊗ g)(δ_r(x)) over a carrier-adapted basis."""
    if not r.is_skew():
        raise InvalidInputError("Dual structure needs a skew-symmetric tensor")
    basis = adapted_basis(carrier(r), complement=cartan_complement)
    return _dual(r, basis)


@dataclass(frozen=True)
class ChainSpec:
    """A chain-family tensor as produced by a builder."""

    n: int
    kind: str
    xi: Optional[tuple[Fraction, ...]] = None
    zeta: Optional[tuple[Fraction, ...]] = None
    normalization: int = 1

    def __post_init__(self) -> None:
        if self.kind not in CHAIN_KINDS:
            raise UnrecognizedStructureError(
                f"Unrecognized chain kind {self.kind!r}; expected one of {', '.join(CHAIN_KINDS)}"
            )

    def active_links(self) -> list[int]:
        links = link_count(self.n)
        if self.xi is None:
            return list(range(1, links + 1))
        return [k for k, x in enumerate(self.xi, start=1) if x]

    def jordanian_links(self) -> list[int]:
        """Indices k of the Jordanian terms H_k^⊥ ∧ Ê_k with ζ_k ≠ 0."""
        links = link_count(self.n)
        if self.zeta is None:
            return list(range(1, links + 1))
        return [k for k, z in enumerate(self.zeta, start=1) if z]

    def build(self) -> BiTensor:
        if self.kind == "fch":
            return build_fch(self.n, self.xi, self.normalization)
        if self.kind == "rotation":
            return build_rotation(self.n, self.xi, self.normalization)
        if self.kind == "rch":
            return build_rch(self.n, self.xi, self.normalization)
        if self.kind == "rJ":
            return build_rJ(self.n, self.zeta, self.xi)
        if self.kind == "ech":
            return build_ech(self.n, self.xi, self.zeta)
        if self.n != 3:
            raise InvalidInputError(f"dj3 is defined for n=3 only, got n={self.n}")
        return build_rch(3, self.xi, self.normalization) + build_dj_sl3()

    def carrier_cartans(self) -> list[LieElement]:
        """The Cartan legs of the tensor, one per active term."""
        n, c = self.n, self.normalization
        links = self.active_links()
        if self.kind == "fch":
            return [half_H(n, k, n - k + 1, c) for k in links]
        if self.kind == "rotation":
            return [h_tilde_perp(n, k) for k in links]
        if self.kind in ("rch", "dj3"):
            cartans = rotated_cartans(n, c)
            chain = [cartans[k - 1] for k in links]
            return chain + [h_perp(3, 1)] if self.kind == "dj3" else chain
        jordanian = jordanian_cartans(n)
        terms = [jordanian[k - 1] for k in self.jordanian_links()]
        if self.kind == "rJ":
            return terms
        return [hat_H_closed(n, k) for k in links] + terms

    def complement_cartans(self) -> list[LieElement]:
        """h_⊥ for the chains, the trace-orthogonal complement otherwise."""
        if self.kind in ("fch", "rch"):
            return theta_orthogonal_complement(self.n, self.active_links())
        return trace_orthogonal_complement(self.n, self.carrier_cartans())

    def root_combinations(self) -> dict[str, LieElement]:
        """Two-unit coordinates Ê_k kept whole in the adapted basis.

        Under the rotated chain δ_r(Ê_k) pairs only with highest-root units,
        which δ_r of the bare unit E_{2k,2k−1} does not, so the complement
        uses Ê_k. The Jordanian term has Ê_k as a carrier leg.
        """
        if self.kind == "rch":
            if self.xi is not None and not all(self.xi):
                return {}
            indices = list(range(1, link_count(self.n) + 1))
        elif self.kind == "rJ":
            indices = self.jordanian_links()
        else:
            return {}
        coordinates = build_E_hat(self.n, self.xi)
        return {
            f"Ehat_{k}": coordinates[k - 1]
            for k in indices
            if len(coordinates[k - 1].entries) == 2
        }


def _contractions(r: BiTensor, basis: AdaptedBasis) -> dict[str, LieElement]:
    """Nonzero images (x* ⊗ 1)(r) of the dual basis."""
    images: dict[str, dict[Index, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for (left, right), value in r.items():
        for label, c in basis.unit_coordinates(left).items():
            images[label][right] += value * c
    result = {}
    for label, entries in images.items():
        element = LieElement(r.n, {unit: v for unit, v in entries.items() if v})
        if not element.is_zero():
            result[label] = element
    return result


def assign_gradings(r: BiTensor, chain_spec: ChainSpec) -> DualAlgebra:
    """The dual of a chain-family tensor with the blue/red grading vectors attached.

    A red dual carries the weight of its basis element: the root of a unit or
    of the leading unit of Ê_k, and 0 for h_⊥. A blue dual x* carries minus the
    weight of (x* ⊗ 1)(r). For the chains this gives E_θ* grade 0, the link
    Cartan duals −θ_s and, for an extension pair E_μ ∧ E_ν, E_μ* the grade −ν;
    in a Jordanian term H^⊥ ∧ Ê the Cartan dual gets minus the root of Ê.

    Raises:
        UnrecognizedStructureError: If r is not the tensor described by
            ``chain_spec`` or its carrier has no homogeneous adapted basis.
    """
    if chain_spec.build() != r:
        raise UnrecognizedStructureError(
            f"Tensor does not match the {chain_spec.kind} builder for n={chain_spec.n}"
        )
    try:
        basis = _GradedBasis(
            carrier(r),
            chain_spec.carrier_cartans(),
            chain_spec.complement_cartans(),
            chain_spec.root_combinations(),
        )
    except InvalidInputError as e:
        raise UnrecognizedStructureError(
            f"No graded basis for the {chain_spec.kind} carrier: {e}"
        ) from e
    group = GradingGroup.of(r)
    mixed = [label for label in basis.labels if not group.is_homogeneous(basis.elements[label])]
    if mixed:
        raise UnrecognizedStructureError(f"Basis elements {', '.join(mixed)} are not homogeneous")

    d = _dual(r, basis)
    images = _contractions(r, basis)
    gradings: dict[str, RootVector] = {}
    for label in d.labels:
        element = basis.elements[label]
        if d.color[label] == RED:
            gradings[label] = _weight(element)
        elif label in images:
            gradings[label] = -_weight(images[label])
        else:
            gradings[label] = _weight(element) - group.degree
    logger.debug(
        f"Graded the {chain_spec.kind} dual of sl({r.n}) modulo {group.rank} weight relations"
    )
    return replace(d, gradings=gradings, grading_group=group)


@dataclass(frozen=True)
class GradingViolation:
    x: str
    y: str
    z: str
    expected: RootVector
    actual: RootVector


def _require_gradings(d: DualAlgebra) -> dict[str, RootVector]:
    if d.gradings is None:
        raise InvalidInputError("Dual algebra has no gradings; use assign_gradings")
    return d.gradings


def grading_consistency(d: DualAlgebra) -> list[GradingViolation]:
    """Structure constants whose grades do not add up.

    Red grades sit one weight of r above the blue ones, so z* in [x*, y*] needs
    grade(x) + grade(y) = grade(z) once every red grade is shifted down by
    that weight. Grades are compared in the grading group of r.
    """
    gradings = _require_gradings(d)
    group = d.grading_group or GradingGroup(d.n, [])
    zero = RootVector.zero(d.n)

    def shift(label: str) -> RootVector:
        return group.degree if d.color[label] == RED else zero

    violations = []
    for (x, y), result in d.structure.items():
        total = gradings[x] - shift(x) + gradings[y] - shift(y)
        for z in result:
            expected = total + shift(z)
            if not group.equivalent(expected, gradings[z]):
                violations.append(GradingViolation(x, y, z, expected, gradings[z]))
    return violations


def primitive_set(d: DualAlgebra) -> list[str]:
    """Generators that never occur in a dual bracket (δ_r vanishes on the partner)."""
    images = d.images()
    return [f"{label}*" for label in d.labels if label not in images]


def _zero_blue(d: DualAlgebra, label: str) -> bool:
    gradings = _require_gradings(d)
    return d.color[label] == BLUE and gradings[label].is_zero()


def quasiprimitive_set(d: DualAlgebra) -> list[str]:
    """Generators produced only by brackets with a zero-grade blue generator."""
    images = d.images()
    result = []
    for label in d.labels:
        pairs = images.get(label, [])
        if all(_zero_blue(d, x) or _zero_blue(d, y) for x, y in pairs):
            result.append(f"{label}*")
    return result


def diagram_quasiprimitive_set(d: DualAlgebra) -> list[str]:
    """Red generators that are not end points of a red point shifted by a nonzero blue grade.

    A red zero point (an h_⊥ dual) counts for e* only when it pairs nontrivially
    with the coroot of e's root.
    """
    gradings = _require_gradings(d)
    n = d.n
    blue_grades = {gradings[x] for x in d.blue() if not gradings[x].is_zero()}
    red_roots = {gradings[x] for x in d.red() if not gradings[x].is_zero()}
    red_zero = [x for x in d.red() if gradings[x].is_zero()]

    result = []
    for label in d.red():
        grade = gradings[label]
        blocked = False
        for b in blue_grades:
            point = grade - b
            if not point.is_zero():
                blocked = point in red_roots
            elif red_zero:
                i = grade.coords.index(1) + 1
                j = grade.coords.index(-1) + 1
                coroot = d.basis.coordinates(cartan_H(n, min(i, j), max(i, j)))
                blocked = any(coroot.get(x) for x in red_zero)
            if blocked:
                break
        if not blocked:
            result.append(f"{label}*")
    return result


def attachable_set(d: DualAlgebra) -> list[str]:
    """Red quasiprimitive generators that are not primitive."""
    quasi = set(quasiprimitive_set(d))
    primitive = set(primitive_set(d))
    return [f"{x}*" for x in d.red() if f"{x}*" in quasi and f"{x}*" not in primitive]


def dual_jacobi_violations(
    d: DualAlgebra, triples: Iterable[tuple[str, str, str]]
) -> list[tuple[str, str, str]]:
    """Triples on which the dual Jacobi identity fails."""
    failed = []
    for x, y, z in triples:
        total: dict[str, Fraction] = defaultdict(Fraction)
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for label, value in d.bracket_linear(a, d.bracket(b, c)).items():
                total[label] += value
        if any(total.values()):
            failed.append((x, y, z))
    return failed


def abelian_ideal_ok(d: DualAlgebra) -> bool:
    """Red duals commute and the bracket of any dual with a red one stays red."""
    red = set(d.red())
    for (x, y), result in d.structure.items():
        if x in red and y in red and result:
            return False
        if (x in red or y in red) and any(z not in red for z in result):
            return False
    return True


@dataclass(frozen=True)
class AnalysisReport:
    """Everything ``analyze`` reports about one tensor.

    Grading-dependent fields are None when no chain spec is given or the
    carrier has no homogeneous adapted basis.
    """

    carrier: Carrier
    abelian_ideal_ok: bool
    primitive: list[str]
    grading_violations: Optional[list[GradingViolation]] = None
    attachable: Optional[list[str]] = None
    quasiprimitive: Optional[list[str]] = None
    diagram_agrees: Optional[bool] = None


def analyze(r: BiTensor, chain_spec: Optional[ChainSpec] = None) -> AnalysisReport:
    """Carrier, dual decomposition and, for chain-family tensors, the grading data."""
    d: Optional[DualAlgebra] = None
    if chain_spec is not None:
        if chain_spec.build() != r:
            raise UnrecognizedStructureError(
                f"Tensor does not match the {chain_spec.kind} builder for n={chain_spec.n}"
            )
        try:
            d = assign_gradings(r, chain_spec)
        except UnrecognizedStructureError as e:
            logger.warning(f"{e}; reporting without gradings")
    if d is None:
        d = dual_structure(r)
    carrier_ = d.basis.carrier
    if d.gradings is None:
        return AnalysisReport(
            carrier=carrier_, abelian_ideal_ok=abelian_ideal_ok(d), primitive=primitive_set(d)
        )

    quasi = quasiprimitive_set(d)
    red = {f"{x}*" for x in d.red()}
    diagram = set(diagram_quasiprimitive_set(d))
    return AnalysisReport(
        carrier=carrier_,
        abelian_ideal_ok=abelian_ideal_ok(d),
        primitive=primitive_set(d),
        grading_violations=grading_consistency(d),
        attachable=attachable_set(d),
        quasiprimitive=quasi,
        diagram_agrees=diagram == set(quasi) & red,
    )
