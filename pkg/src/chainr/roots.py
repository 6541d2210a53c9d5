"""Classical root systems and the highest-root filtration.

Starting from V_0 = span of the roots, the highest root θ_k of the roots left
in V_k is removed and V_{k+1} is its orthogonal complement in V_k. The
procedure stops at V_f when no roots are left. The root system is of type II
when V_f = 0 and of type I otherwise.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Union

import sympy

from .exceptions import InvalidInputError
from .lie import RootVector

logger = logging.getLogger(__name__)


class Series(str, Enum):
    """The four classical series."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"


class TypeTag(str, Enum):
    I = "I"  # noqa: E741
    II = "II"


def _series(value: Union[str, Series]) -> Series:
    if isinstance(value, Series):
        return value
    try:
        return Series(value.upper())
    except ValueError:
        raise InvalidInputError(f"Unsupported series {value!r}; expected A, B, C or D") from None


@dataclass(frozen=True)
class RootSystem:
    """The roots of a classical series in e-coordinates."""

    series: Series
    rank: int
    roots: tuple[RootVector, ...]

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.series is Series.A else self.rank

    def inner_product(self, a: RootVector, b: RootVector) -> int:
        return a.dot(b)


@dataclass(frozen=True)
class ThetaFiltration:
    """The highest-root sequence θ_0, …, θ_{f−1} and the dimensions of V_0, …, V_f.

    ``bases[k]`` is an exact basis of V_k (rational coordinate tuples).
    """

    thetas: tuple[RootVector, ...]
    subspace_dims: tuple[int, ...]
    bases: tuple[tuple[tuple[Fraction, ...], ...], ...] = field(repr=False)

    @property
    def f(self) -> int:
        return len(self.thetas)

    @property
    def type_tag(self) -> TypeTag:
        return TypeTag.II if self.subspace_dims[-1] == 0 else TypeTag.I


@dataclass(frozen=True)
class Classification:
    """Type I/II verdict for a classical series.

    ``dim_last`` is dim V_f, the residual space without roots; ``dim_before_last``
    is dim V_{f−1}.
    """

    series: Series
    rank: int
    type_tag: TypeTag
    f: int
    dim_last: int
    dim_before_last: int
    filtration: ThetaFiltration


def _signed_pairs(length: int, i: int, j: int) -> list[RootVector]:
    e_i, e_j = RootVector.e(length, i), RootVector.e(length, j)
    return [e_i + e_j, e_i - e_j, -e_i + e_j, -e_i - e_j]


@lru_cache(maxsize=None)
def root_system(series: Union[str, Series], rank: int) -> RootSystem:
    """Enumerate the roots of A_r, B_r, C_r or D_r."""
    kind = _series(series)
    minimum = 2 if kind is Series.D else 1
    if rank < minimum:
        raise InvalidInputError(f"Rank {rank} unsupported for series {kind.value}")

    roots: list[RootVector] = []
    if kind is Series.A:
        length = rank + 1
        for i in range(1, length + 1):
            for j in range(1, length + 1):
                if i != j:
                    roots.append(RootVector.root(length, i, j))
    else:
        for i, j in combinations(range(1, rank + 1), 2):
            roots.extend(_signed_pairs(rank, i, j))
        for i in range(1, rank + 1):
            e_i = RootVector.e(rank, i)
            if kind is Series.B:
                roots.extend([e_i, -e_i])
            elif kind is Series.C:
                roots.extend([e_i + e_i, -(e_i + e_i)])
    return RootSystem(series=kind, rank=rank, roots=tuple(sorted(roots, key=lambda r: r.coords)))


def _height_weights(series: Series, rank: int) -> list[Fraction]:
    """A functional taking the value 1 on every standard simple root."""
    if series is Series.A:
        return [Fraction(rank + 2 - i) for i in range(1, rank + 2)]
    if series is Series.B:
        return [Fraction(rank - i + 1) for i in range(1, rank + 1)]
    if series is Series.C:
        return [Fraction(2 * (rank - i) + 1, 2) for i in range(1, rank + 1)]
    return [Fraction(rank - i) for i in range(1, rank + 1)]


def height(rs: RootSystem, root: RootVector) -> Fraction:
    """Height of a root with respect to the canonical positive system."""
    weights = _height_weights(rs.series, rs.rank)
    return sum((w * c for w, c in zip(weights, root.coords)), Fraction(0))


def highest_root(rs: RootSystem, candidates: list[RootVector]) -> RootVector:
    """Maximal height, ties broken by the larger e-coordinates lexicographically."""
    return max(candidates, key=lambda r: (height(rs, r), r.coords))


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational_value = sympy.Rational(value)
    return Fraction(int(rational_value.p), int(rational_value.q))


def _dot(a: tuple[int, ...], b: tuple[Fraction, ...]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _orthogonal_basis(rows: list[tuple[Any, ...]], dim: int) -> list[tuple[Fraction, ...]]:
    """Exact basis of the orthogonal complement of the given rows in ℚ^dim."""
    if not rows:
        return [tuple(Fraction(int(i == k)) for i in range(dim)) for k in range(dim)]
    null = sympy.Matrix(rows).nullspace()
    return [tuple(_to_fraction(x) for x in vector) for vector in null]


def theta_filtration(rs: RootSystem) -> ThetaFiltration:
    """Select highest roots until the remaining subspace holds no roots."""
    dim = rs.ambient_dim
    root_rows = [r.coords for r in rs.roots]
    # complement generators of V_0 = span of the roots (empty unless series A)
    generators: list[tuple[Fraction, ...]] = _orthogonal_basis(root_rows, dim)
    thetas: list[RootVector] = []
    bases = [tuple(_orthogonal_basis(generators, dim))]

    while True:
        remaining = [r for r in rs.roots if all(_dot(r.coords, g) == 0 for g in generators)]
        if not remaining:
            break
        top = highest_root(rs, remaining)
        thetas.append(top)
        generators.append(tuple(Fraction(c) for c in top.coords))
        bases.append(tuple(_orthogonal_basis(generators, dim)))
        logger.debug(f"{rs.series.value}{rs.rank}: θ_{len(thetas) - 1} = {top.coords}")

    return ThetaFiltration(
        thetas=tuple(thetas),
        subspace_dims=tuple(len(basis) for basis in bases),
        bases=tuple(bases),
    )


def classify_type(series: Union[str, Series], rank: int) -> Classification:
    """Type I/II classification with the residual dimensions."""
    rs = root_system(series, rank)
    filtration = theta_filtration(rs)
    dims = filtration.subspace_dims
    return Classification(
        series=rs.series,
        rank=rank,
        type_tag=filtration.type_tag,
        f=filtration.f,
        dim_last=dims[-1],
        dim_before_last=dims[-2] if len(dims) > 1 else dims[-1],
        filtration=filtration,
    )
