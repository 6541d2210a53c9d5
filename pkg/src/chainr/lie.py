"""Exact rationals and the Lie algebra sl(n) in the matrix-unit basis.

Elements are stored as sparse maps from 1-based index pairs ``(i, j)`` to
``Fraction`` entries. Diagonal entries are stored as a full matrix diagonal,
so the various Cartan elements (``H_{ij}``, ``H_k^perp``, rotated and solved
Cartans) compare by plain entry-wise equality.
"""

import logging
import re
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exceptions import InvalidInputError

logger = logging.getLogger(__name__)

Rational = Fraction
Index = tuple[int, int]
Scalar = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rational(value: Union[str, int, Fraction]) -> Fraction:
    """Coerce a value to an exact rational.

    Strings must have the form ``"p"`` or ``"p/q"``; decimal notation is rejected
    so that no floating-point reading ever enters a computation.

    Raises:
        InvalidInputError: If the value is not an exact rational.
    """
    if isinstance(value, bool):
        raise InvalidInputError(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InvalidInputError(f"Not a rational of the form p/q: {value!r}")
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise InvalidInputError(f"Zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise InvalidInputError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational in lowest terms, omitting a unit denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LieElement:
    """A traceless n×n matrix with exact rational entries.

    The stored entries never contain zeros, which makes equality and hashing
    structural.

    Args:
        n: Matrix size.
        entries: Mapping from 1-based ``(i, j)`` to a rational coefficient.

    Raises:
        InvalidInputError: If an index is out of range or the trace is nonzero.
    """

    __slots__ = ("_n", "_entries", "_hash")

    def __init__(self, n: int, entries: Optional[Mapping[Index, Scalar]] = None):
        if n < 2:
            raise InvalidInputError(f"Matrix size must be at least 2, got {n}")
        cleaned: dict[Index, Fraction] = {}
        trace = Fraction(0)
        for (i, j), value in dict(entries or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInputError(f"Index ({i}, {j}) out of range for n={n}")
            coefficient = rational(value)
            if coefficient:
                cleaned[(i, j)] = coefficient
                if i == j:
                    trace += coefficient
        if trace:
            raise InvalidInputError(f"Element is not traceless (trace {trace})")
        self._n = n
        self._entries = dict(sorted(cleaned.items()))
        self._hash: Union[int, None] = None

    @classmethod
    def _from_clean(cls, n: int, entries: dict[Index, Fraction]) -> "LieElement":
        """Build an element from entries already known to be valid and zero-free."""
        element = cls.__new__(cls)
        element._n = n
        element._entries = dict(sorted(entries.items()))
        element._hash = None
        return element

    @classmethod
    def zero(cls, n: int) -> "LieElement":
        return cls(n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def entries(self) -> dict[Index, Fraction]:
        """A copy of the sparse entries, sorted by index."""
        return dict(self._entries)

    def items(self) -> Iterator[tuple[Index, Fraction]]:
        return iter(self._entries.items())

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._entries

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._entries)

    def diagonal(self) -> list[Fraction]:
        """The diagonal entries as a list of length n."""
        return [self.entry(i, i) for i in range(1, self._n + 1)]

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self._entries.items() if i == j), Fraction(0))

    def _check_same_n(self, other: "LieElement") -> None:
        if self._n != other._n:
            raise InvalidInputError(f"Dimension mismatch: n={self._n} vs n={other._n}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check_same_n(other)
        result = dict(self._entries)
        for key, value in other._entries.items():
            total = result.get(key, Fraction(0)) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return LieElement._from_clean(self._n, result)

    def __neg__(self) -> "LieElement":
        return LieElement._from_clean(self._n, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "LieElement":
        factor = rational(scalar)
        if not factor:
            return LieElement.zero(self._n)
        return LieElement._from_clean(self._n, {k: v * factor for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._n == other._n and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"E{i},{j}: {format_rational(v)}" for (i, j), v in self._entries.items())
        return f"LieElement(n={self._n}, {{{body}}})"


@dataclass(frozen=True)
class RootVector:
    """A vector in the orthonormal e-basis (length n for A, rank for B, C, D)."""

    coords: tuple[int, ...]

    @classmethod
    def e(cls, length: int, i: int) -> "RootVector":
        """The basis vector e_i (1-based)."""
        if not 1 <= i <= length:
            raise InvalidInputError(f"Basis index {i} out of range 1..{length}")
        return cls(tuple(1 if k == i else 0 for k in range(1, length + 1)))

    @classmethod
    def root(cls, length: int, i: int, j: int) -> "RootVector":
        """The A-series root e_i − e_j."""
        return cls.e(length, i) - cls.e(length, j)

    @classmethod
    def zero(cls, length: int) -> "RootVector":
        return cls((0,) * length)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))

    def dot(self, other: "RootVector") -> int:
        self._check(other)
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: "RootVector") -> None:
        if len(self.coords) != len(other.coords):
            raise InvalidInputError(
                f"Root vector length mismatch: {len(self.coords)} vs {len(other.coords)}"
            )


def _check_index(n: int, *indices: int) -> None:
    for index in indices:
        if not 1 <= index <= n:
            raise InvalidInputError(f"Index {index} out of range 1..{n}")


def require_odd(n: int) -> int:
    """Return m = (n − 1) / 2 for odd n ≥ 3."""
    if n < 3 or n % 2 == 0:
        raise InvalidInputError(f"n must be odd and at least 3, got {n}")
    return (n - 1) // 2


def matrix_unit(n: int, i: int, j: int) -> LieElement:
    """The off-diagonal matrix unit E_{ij}."""
    _check_index(n, i, j)
    if i == j:
        raise InvalidInputError(f"Diagonal unit E_{i},{j} is not traceless")
    return LieElement._from_clean(n, {(i, j): Fraction(1)})


def diagonal(n: int, values: Sequence[Scalar]) -> LieElement:
    """A traceless diagonal element with the given diagonal entries."""
    if len(values) != n:
        raise InvalidInputError(f"Expected {n} diagonal entries, got {len(values)}")
    return LieElement(n, {(i, i): value for i, value in enumerate(values, start=1)})


def cartan_H(n: int, i: int, j: int) -> LieElement:
    """H_{ij} = E_{ii} − E_{jj} for i < j."""
    _check_index(n, i, j)
    if i >= j:
        raise InvalidInputError(f"cartan_H needs i < j, got ({i}, {j})")
    return LieElement._from_clean(n, {(i, i): Fraction(1), (j, j): Fraction(-1)})


def half_H(n: int, i: int, j: int, normalization: int = 1) -> LieElement:
    """The chain Cartan symbol (c/2)(E_{ii} − E_{jj}) for normalization c.

    With c = 1 the element has eigenvalue 1 on E_{ij}; c = 2 gives ``cartan_H``.
    """
    if normalization not in (1, 2):
        raise InvalidInputError(f"Normalization must be 1 or 2, got {normalization}")
    return cartan_H(n, i, j) * Fraction(normalization, 2)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """The commutator xy − yx."""
    x._check_same_n(y)
    y_by_row: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for (k, l), b in y.items():
        y_by_row[k].append((l, b))
    x_by_row: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for (k, l), a in x.items():
        x_by_row[k].append((l, a))

    result: dict[Index, Fraction] = defaultdict(Fraction)
    for (i, j), a in x.items():
        for l, b in y_by_row.get(j, ()):
            result[(i, l)] += a * b
    for (i, j), b in y.items():
        for l, a in x_by_row.get(j, ()):
            result[(i, l)] -= b * a
    return LieElement._from_clean(x.n, {k: v for k, v in result.items() if v})


def h_perp(n: int, k: int) -> LieElement:
    """The Cartan leg H_k^perp of the k-th additional Jordanian term (n odd).

    ((4k − 2)/n)·I − Σ_{u=1}^{2k−1} (E_{uu} + E_{n−u+1,n−u+1}).
    """
    m = require_odd(n)
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must be in 1..{m}, got {k}")
    values = [Fraction(4 * k - 2, n)] * n
    for u in range(1, 2 * k):
        values[u - 1] -= 1
        values[n - u] -= 1
    return diagonal(n, values)


def h_tilde_perp(n: int, i: int) -> LieElement:
    """The rotation Cartan Σ_{j=i}^{n−i} (−1)^{j+1} H_{j,j+1}, orthogonal to every θ_s."""
    m = require_odd(n)
    if not 1 <= i <= m:
        raise InvalidInputError(f"i must be in 1..{m}, got {i}")
    total = LieElement.zero(n)
    for j in range(i, n - i + 1):
        sign = 1 if j % 2 == 1 else -1
        total = total + cartan_H(n, j, j + 1) * sign
    return total


def hat_H_closed(n: int, k: int) -> LieElement:
    """Closed-form enlargement Cartan Ĥ_k, evaluated term by term."""
    m = require_odd(n)
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must be in 1..{m}, got {k}")
    sign = 1 if k % 2 == 1 else -1
    values = [Fraction(2 * k - 1, n)] * n
    for j in range(1, k):
        values[j - 1] -= 1
        values[n - j] -= 1
    half = Fraction(1, 2)
    values[k - 1] += half * (sign - 1)
    values[n - k] += half * (-sign - 1)
    return diagonal(n, [sign * v for v in values])


def hat_H_printed(n: int, k: int) -> LieElement:
    """The tabulated sum form 2 Σ_i (H_{2i−1,2i} + H_i^⊥) of Ĥ_k, i from ⌊k/2⌋+1 to m−⌊(k−1)/2⌋.

    This is the index pattern of the sl(11) table, read for any odd n. It is
    kept for comparison only: it is not a multiple of the solved Ĥ_k.
    """
    m = require_odd(n)
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must be in 1..{m}, got {k}")
    total = LieElement.zero(n)
    for i in range(k // 2 + 1, m - (k - 1) // 2 + 1):
        total = total + cartan_H(n, 2 * i - 1, 2 * i) + h_perp(n, i)
    return total * 2


def root_eval(weight: RootVector, h: LieElement) -> Fraction:
    """Evaluate a root (in e-coordinates) on a diagonal element."""
    if not h.is_diagonal():
        raise InvalidInputError("root_eval needs a diagonal element")
    if len(weight) != h.n:
        raise InvalidInputError(f"Root of length {len(weight)} cannot act on sl({h.n})")
    return sum((c * v for c, v in zip(weight.coords, h.diagonal())), Fraction(0))


def theta(n: int, s: int) -> RootVector:
    """The s-th chain highest root e_s − e_{n−s+1}."""
    return RootVector.root(n, s, n - s + 1)


def alpha(n: int, k: int) -> RootVector:
    """The simple root e_k − e_{k+1}."""
    return RootVector.root(n, k, k + 1)


def cartan_coordinates(h: LieElement) -> list[Fraction]:
    """Coordinates of a diagonal element in the basis H_{c,c+1}, c = 1..n−1.

    The coefficient of H_{c,c+1} is the partial sum of the first c diagonal entries.
    """
    if not h.is_diagonal():
        raise InvalidInputError("cartan_coordinates needs a diagonal element")
    coords: list[Fraction] = []
    running = Fraction(0)
    for value in h.diagonal()[:-1]:
        running += value
        coords.append(running)
    return coords


def from_cartan_coordinates(n: int, coords: Iterable[Scalar]) -> LieElement:
    """Inverse of ``cartan_coordinates``."""
    values = list(coords)
    if len(values) != n - 1:
        raise InvalidInputError(f"Expected {n - 1} Cartan coordinates, got {len(values)}")
    total = LieElement.zero(n)
    for c, value in enumerate(values, start=1):
        if value:
            total = total + cartan_H(n, c, c + 1) * value
    return total
