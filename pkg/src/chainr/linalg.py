"""Exact sparse linear algebra over the rationals.

``SparseRow`` is a dictionary ``key -> Fraction`` with zeros removed, used both
as a vector in a space with labelled coordinates and as a linear equation
``Σ c_k x_k = 0``. ``EchelonBasis`` keeps a fully reduced echelon basis of the
rows added so far; it answers span membership, gives coordinates and solves
linear systems without ever leaving exact arithmetic.
"""

import logging
from collections.abc import Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Callable, Optional, Union

logger = logging.getLogger(__name__)

Key = Hashable


class SparseRow(dict[Any, Fraction]):
    """A sparse vector ``key -> Fraction``; zero entries are never stored."""

    def __init__(self, data: Union[Mapping[Any, Any], Iterable[tuple[Any, Any]]] = ()):
        super().__init__()
        self.iadd_coef(Fraction(1), data)

    def __getitem__(self, key: Key) -> Fraction:
        return self.get(key, Fraction(0))

    def iadd_coef(
        self, coef: Fraction, other: Union[Mapping[Any, Any], Iterable[tuple[Any, Any]]]
    ) -> "SparseRow":
        """In place ``self += coef * other``."""
        if coef == 0:
            return self
        items = other.items() if isinstance(other, Mapping) else other
        for key, value in items:
            if value == 0:
                continue
            updated = self.get(key, Fraction(0)) + coef * Fraction(value)
            if updated == 0:
                del self[key]
            else:
                self[key] = updated
        return self

    def __mul__(self, factor: Union[int, Fraction]) -> "SparseRow":
        if factor == 0:
            return SparseRow()
        return SparseRow((key, value * factor) for key, value in self.items())

    __rmul__ = __mul__

    def __add__(self, other: Mapping[Any, Any]) -> "SparseRow":
        return SparseRow(self).iadd_coef(Fraction(1), other)

    def __sub__(self, other: Mapping[Any, Any]) -> "SparseRow":
        return SparseRow(self).iadd_coef(Fraction(-1), other)


class EchelonBasis:
    """A fully reduced echelon basis of a subspace.

    Every stored row has coefficient 1 at its pivot and 0 at every other pivot,
    so reducing a vector takes a single pass over the pivots it touches.

    Args:
        order: Sort key on coordinate labels; the smallest label of a new row
            becomes its pivot. Defaults to the natural ordering of the labels.
    """

    def __init__(self, order: Optional[Callable[[Any], Any]] = None):
        self._order = order
        self._rows: dict[Key, SparseRow] = {}
        # column label -> pivots of rows that contain it
        self._columns: dict[Key, set[Key]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[SparseRow]:
        return iter(self.rows())

    @property
    def pivots(self) -> list[Key]:
        return sorted(self._rows, key=self._order) if self._order else sorted(self._rows)

    def rows(self) -> list[SparseRow]:
        """Basis rows sorted by pivot."""
        return [self._rows[p] for p in self.pivots]

    def row(self, pivot: Key) -> SparseRow:
        return self._rows[pivot]

    def has_pivot(self, key: Key) -> bool:
        return key in self._rows

    def reduce(self, vector: Mapping[Any, Any]) -> SparseRow:
        """The remainder of a vector after eliminating every pivot."""
        residual = SparseRow(vector)
        for pivot in [k for k in residual if k in self._rows]:
            coef = residual[pivot]
            if coef:
                residual.iadd_coef(-coef, self._rows[pivot])
        return residual

    def contains(self, vector: Mapping[Any, Any]) -> bool:
        return not self.reduce(vector)

    def coordinates(self, vector: Mapping[Any, Any]) -> Optional[dict[Key, Fraction]]:
        """Coefficients of a vector on the basis rows (keyed by pivot), or None."""
        if not self.contains(vector):
            return None
        source = SparseRow(vector)
        return {pivot: source[pivot] for pivot in self._rows if source[pivot]}

    def add(self, vector: Mapping[Any, Any]) -> bool:
        """Add a vector to the span.

        Returns:
            True if the vector was independent of the current basis.
        """
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual, key=self._order) if self._order else min(residual)
        residual = residual * (Fraction(1) / residual[pivot])

        for other_pivot in list(self._columns.get(pivot, ())):
            row = self._rows[other_pivot]
            coef = row[pivot]
            for key in row:
                self._columns[key].discard(other_pivot)
            row.iadd_coef(-coef, residual)
            for key in row:
                self._columns.setdefault(key, set()).add(other_pivot)

        self._rows[pivot] = residual
        for key in residual:
            self._columns.setdefault(key, set()).add(pivot)
        return True

    def extend(self, vectors: Iterable[Mapping[Any, Any]]) -> int:
        """Add several vectors; returns how many were independent."""
        return sum(1 for vector in vectors if self.add(vector))


class LinearSystem:
    """An exact linear system ``Σ_j a_ij x_j + b_i = 0`` over labelled unknowns.

    Equations are reduced into an ``EchelonBasis`` as they arrive, with the
    constant column ordered after every unknown so it can only become a pivot
    when an equation is inconsistent.
    """

    CONSTANT = ("__constant__",)

    def __init__(self, unknowns: Iterable[Key]):
        self.unknowns = list(unknowns)
        position = {u: i for i, u in enumerate(self.unknowns)}
        last = len(self.unknowns)
        self._basis = EchelonBasis(order=lambda key: position.get(key, last))
        self.inconsistent_equation: Optional[SparseRow] = None
        self.equation_count = 0

    def add_equation(self, coefficients: Mapping[Any, Any], constant: Fraction) -> None:
        equation = SparseRow(coefficients)
        if constant:
            equation[self.CONSTANT] = Fraction(constant)
        self.equation_count += 1
        self._basis.add(equation)
        if self._basis.has_pivot(self.CONSTANT) and self.inconsistent_equation is None:
            self.inconsistent_equation = SparseRow(equation)

    @property
    def consistent(self) -> bool:
        return not self._basis.has_pivot(self.CONSTANT)

    @property
    def rank(self) -> int:
        return len(self._basis) - (0 if self.consistent else 1)

    @property
    def nullity(self) -> int:
        return len(self.unknowns) - self.rank

    def particular_solution(self) -> dict[Key, Fraction]:
        """A solution with every free unknown set to zero."""
        solution = {u: Fraction(0) for u in self.unknowns}
        for pivot in self._basis.pivots:
            if pivot == self.CONSTANT:
                continue
            solution[pivot] = -self._basis.row(pivot)[self.CONSTANT]
        return solution
