"""Sparse tensors over sl(n), the Schouten bracket and the cobracket.

Tensor legs are matrix units ``E_{ij}`` of gl(n) (diagonal units included), so
any element of sl(n)⊗sl(n) has a unique canonical expansion and the CYBE test
reduces to an emptiness check on the canonical form of the Schouten bracket.

Conventions: ``a∧b = a⊗b − b⊗a`` and ``δ_r(x) = [x⊗1 + 1⊗x, r]``.
"""

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from typing_extensions import Self

from .exceptions import InvalidInputError, NonSkewTensorError
from .lie import Index, LieElement, Scalar, format_rational, rational

logger = logging.getLogger(__name__)

BiKey = tuple[Index, Index]
TriKey = tuple[Index, Index, Index]


class _SparseTensor:
    """Shared canonical-form storage for tensors with a fixed number of legs."""

    __slots__ = ("_n", "_terms", "_hash")
    arity = 0

    def __init__(self, n: int, terms: Optional[Mapping[tuple[Index, ...], Scalar]] = None):
        if n < 2:
            raise InvalidInputError(f"Matrix size must be at least 2, got {n}")
        cleaned: dict[tuple[Index, ...], Fraction] = {}
        for key, value in dict(terms or {}).items():
            if len(key) != self.arity:
                raise InvalidInputError(f"Expected {self.arity} legs, got {len(key)}")
            for i, j in key:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise InvalidInputError(f"Leg E_{i},{j} out of range for n={n}")
            coefficient = rational(value)
            if coefficient:
                cleaned[tuple(key)] = coefficient
        self._n = n
        self._terms = dict(sorted(cleaned.items()))
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, n: int, terms: Mapping[tuple[Index, ...], Fraction]) -> Self:
        tensor = cls.__new__(cls)
        tensor._n = n
        tensor._terms = dict(sorted((k, v) for k, v in terms.items() if v))
        tensor._hash = None
        return tensor

    @classmethod
    def zero(cls, n: int) -> Self:
        return cls._from_clean(n, {})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[tuple[Index, ...], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[Index, ...], Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, key: tuple[Index, ...]) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_terms(self, count: int) -> list[tuple[tuple[Index, ...], Fraction]]:
        """The ``count`` lexicographically first terms."""
        return list(self._terms.items())[:count]

    def _check_same(self, other: "_SparseTensor") -> None:
        if type(self) is not type(other):
            raise InvalidInputError(
                f"Cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if self._n != other._n:
            raise InvalidInputError(f"Dimension mismatch: n={self._n} vs n={other._n}")

    def __add__(self, other: Self) -> Self:
        self._check_same(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            result[key] = result.get(key, Fraction(0)) + value
        return type(self)._from_clean(self._n, result)

    def __neg__(self) -> Self:
        return type(self)._from_clean(self._n, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> Self:
        factor = rational(scalar)
        return type(self)._from_clean(self._n, {k: v * factor for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _SparseTensor) or type(self) is not type(other):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        shown = " + ".join(
            f"{format_rational(v)}·" + "⊗".join(f"E{i},{j}" for i, j in key)
            for key, v in self.leading_terms(6)
        )
        more = f" + … ({len(self)} terms)" if len(self) > 6 else ""
        return f"{type(self).__name__}(n={self._n}, {shown or '0'}{more})"


class BiTensor(_SparseTensor):
    """An element of gl(n)⊗gl(n) keyed by ``((i, j), (k, l))`` for E_{ij}⊗E_{kl}."""

    arity = 2

    def swap_legs(self) -> "BiTensor":
        return BiTensor._from_clean(self._n, {(b, a): v for (a, b), v in self._terms.items()})

    def is_skew(self) -> bool:
        return self.swap_legs() == -self


class TriTensor(_SparseTensor):
    """An element of gl(n)⊗gl(n)⊗gl(n); holds Schouten brackets."""

    arity = 3


@dataclass(frozen=True)
class CybeVerdict:
    """Outcome of a CYBE check.

    Attributes:
        holds: True iff the Schouten bracket is exactly zero.
        residual_term_count: Number of nonzero terms of the Schouten bracket.
        residual: The Schouten bracket itself.
    """

    holds: bool
    residual_term_count: int
    residual: TriTensor


def lie_tensor(a: LieElement, b: LieElement) -> BiTensor:
    """The plain tensor product a⊗b."""
    a._check_same_n(b)
    terms: dict[tuple[Index, ...], Fraction] = {}
    for left, x in a.items():
        for right, y in b.items():
            terms[(left, right)] = x * y
    return BiTensor._from_clean(a.n, terms)


def wedge(a: LieElement, b: LieElement) -> BiTensor:
    """a∧b = a⊗b − b⊗a."""
    return lie_tensor(a, b) - lie_tensor(b, a)


def _require_skew(r: BiTensor) -> None:
    if not r.is_skew():
        raise NonSkewTensorError("Schouten bracket needs a skew-symmetric tensor")


def _index_legs(
    s: BiTensor,
) -> tuple[dict[int, list[tuple[Index, Index, Fraction]]], ...]:
    """Index the terms of s by left-leg row/column and right-leg row/column."""
    left_row: dict[int, list[tuple[Index, Index, Fraction]]] = defaultdict(list)
    left_col: dict[int, list[tuple[Index, Index, Fraction]]] = defaultdict(list)
    right_row: dict[int, list[tuple[Index, Index, Fraction]]] = defaultdict(list)
    right_col: dict[int, list[tuple[Index, Index, Fraction]]] = defaultdict(list)
    for (a, b), c in s.items():
        entry = (a, b, c)
        left_row[a[0]].append(entry)
        left_col[a[1]].append(entry)
        right_row[b[0]].append(entry)
        right_col[b[1]].append(entry)
    return left_row, left_col, right_row, right_col


def _pairing(r: BiTensor, s: BiTensor) -> dict[TriKey, Fraction]:
    """[r12, s13] + [r12, s23] + [r13, s23], accumulated term by term.

    Uses [E_ij, E_kl] = δ_jk E_il − δ_li E_kj, visiting only the s-terms whose
    legs share an index with the r-leg being bracketed.
    """
    left_row, left_col, right_row, right_col = _index_legs(s)
    acc: dict[TriKey, Fraction] = defaultdict(Fraction)
    for (a, b), c in r.items():
        i, j = a
        p, q = b
        # [a, a'] ⊗ b ⊗ b'
        for a2, b2, c2 in left_row.get(j, ()):
            acc[((i, a2[1]), b, b2)] += c * c2
        for a2, b2, c2 in left_col.get(i, ()):
            acc[((a2[0], j), b, b2)] -= c * c2
        # a ⊗ [b, a'] ⊗ b'
        for a2, b2, c2 in left_row.get(q, ()):
            acc[(a, (p, a2[1]), b2)] += c * c2
        for a2, b2, c2 in left_col.get(p, ()):
            acc[(a, (a2[0], q), b2)] -= c * c2
        # a ⊗ a' ⊗ [b, b']
        for a2, b2, c2 in right_row.get(q, ()):
            acc[(a, a2, (p, b2[1]))] += c * c2
        for a2, b2, c2 in right_col.get(p, ()):
            acc[(a, a2, (b2[0], q))] -= c * c2
    return acc


def schouten(r: BiTensor) -> TriTensor:
    """The Schouten bracket [[r, r]]; r must be skew."""
    _require_skew(r)
    result = TriTensor._from_clean(r.n, _pairing(r, r))  # type: ignore[arg-type]
    logger.debug(f"Schouten bracket of {len(r)} terms has {len(result)} terms")
    return result


def mixed_schouten(r1: BiTensor, r2: BiTensor) -> TriTensor:
    """The polarization [[r1, r2]] + [[r2, r1]] = [[r1+r2]] − [[r1]] − [[r2]]."""
    r1._check_same(r2)
    _require_skew(r1)
    _require_skew(r2)
    acc = _pairing(r1, r2)
    for key, value in _pairing(r2, r1).items():
        acc[key] += value
    return TriTensor._from_clean(r1.n, acc)  # type: ignore[arg-type]


def is_cybe_solution(r: BiTensor) -> CybeVerdict:
    """Decide the CYBE exactly."""
    residual = schouten(r)
    return CybeVerdict(
        holds=residual.is_zero(), residual_term_count=len(residual), residual=residual
    )


def _bracket_with_unit(
    x_by_col: Mapping[int, list[tuple[int, Fraction]]],
    x_by_row: Mapping[int, list[tuple[int, Fraction]]],
    unit: Index,
) -> list[tuple[Index, Fraction]]:
    """[x, E_kl] as a list of (unit, coefficient) pairs (may repeat units)."""
    k, l = unit
    terms: list[tuple[Index, Fraction]] = []
    # x_ij with j = k contributes +x_ij E_il
    for i, value in x_by_col.get(k, ()):
        terms.append(((i, l), value))
    # x_ij with i = l contributes −x_ij E_kj
    for j, value in x_by_row.get(l, ()):
        terms.append(((k, j), -value))
    return terms


def adjoint_action(x: LieElement, t: BiTensor) -> BiTensor:
    """(ad_x ⊗ 1 + 1 ⊗ ad_x) t."""
    if x.n != t.n:
        raise InvalidInputError(f"Dimension mismatch: n={x.n} vs n={t.n}")
    x_by_col: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    x_by_row: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for (i, j), value in x.items():
        x_by_col[j].append((i, value))
        x_by_row[i].append((j, value))
    acc: dict[tuple[Index, ...], Fraction] = defaultdict(Fraction)
    for (a, b), c in t.items():
        for unit, value in _bracket_with_unit(x_by_col, x_by_row, a):
            acc[(unit, b)] += c * value
        for unit, value in _bracket_with_unit(x_by_col, x_by_row, b):
            acc[(a, unit)] += c * value
    return BiTensor._from_clean(t.n, acc)


def cobracket(r: BiTensor, x: LieElement) -> BiTensor:
    """δ_r(x) = [x⊗1 + 1⊗x, r]."""
    return adjoint_action(x, r)
