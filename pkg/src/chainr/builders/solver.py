"""Exact solver for the Cartan elements of the enlarged chain.

The rotated chain Σ_k (Ĥ_k ∧ E_{k,n−k+1} + extension_k) is enlarged by the
Jordanian terms r_J = Σ_k H_k^⊥ ∧ Ê_k. Each Ĥ_k is written over the full Cartan
subalgebra, Ĥ_k = Σ_c x_{k,c} H_{c,c+1}, and the mixed Schouten bracket
[[chain, r_J]] + [[r_J, chain]] is linear in the unknowns x_{k,c}. Every
coefficient of that bracket gives one equation; the system is solved by exact
elimination and the solution is then checked against the full CYBE.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..exceptions import InconsistentSystemError, InvalidInputError
from ..lie import (
    LieElement,
    cartan_H,
    from_cartan_coordinates,
    half_H,
    hat_H_closed,
    hat_H_printed,
    h_perp,
    matrix_unit,
    root_eval,
    theta,
)
from ..linalg import LinearSystem, SparseRow
from ..tensor import BiTensor, TriTensor, is_cybe_solution, mixed_schouten, wedge
from .chains import (
    ParamList,
    build_chain_with_cartans,
    chain_extension,
    coerce_params,
    highest_root_unit,
    link_count,
)
from .jordanian import build_E_hat, build_rJ

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnlargementSolution:
    """Solved Cartan elements Ĥ_k of the enlarged chain and their cross-checks.

    Attributes:
        n: Matrix size.
        hat_H: The solved Ĥ_1, …, Ĥ_links.
        jordanian_cartans: The Cartan legs H_k^⊥ of the additional Jordanian terms.
        coordinates: The root coordinates Ê_k at ξ = (1, …, 1).
        orthogonal_roots: Indices a of the simple roots α_a carrying the Jordanians.
        unique: True iff the linear system has a single solution.
        solution_space_dim: Dimension of the affine solution space.
        equation_count: Number of equations collected from the mixed bracket.
        normalization_c: The common eigenvalue of Ĥ_k on E_{k,n−k+1}, or None if the
            eigenvalues are not of the form c·δ_kl.
        gamma: Coefficients γ_kl with Ĥ_k = H^{(c)}_{k,n−k+1} + Σ_l γ_kl H_l^⊥, or
            None if some Ĥ_k is not of that form.
        cybe_holds: The CYBE verdict for the enlarged chain at ξ = ζ = 1.
        closed_form_agrees: Whether the closed-form Cartans equal the solved ones
            (odd n only).
        closed_form_scale: s with closed form = s · solved, if one exists.
        literal_hat_H: H_{k,n−k+1} + Σ_l γ_kl H_l^⊥ with the unscaled E_kk − E_jj.
        literal_cybe_holds: The CYBE verdict for the chain built from literal_hat_H.
        printed_hat_H: The tabulated sum forms ``hat_H_printed`` (odd n only).
        printed_agrees: Whether the tabulated forms equal the solved Cartans.
        printed_scale: s with tabulated form = s · solved, if one exists.
        normative: False for the exploratory even-n mode and custom root choices.
    """

    n: int
    hat_H: tuple[LieElement, ...]
    jordanian_cartans: tuple[LieElement, ...]
    coordinates: tuple[LieElement, ...]
    orthogonal_roots: tuple[int, ...]
    unique: bool
    solution_space_dim: int
    equation_count: int
    normalization_c: Optional[Fraction]
    gamma: Optional[tuple[tuple[Fraction, ...], ...]]
    cybe_holds: bool
    closed_form_agrees: Optional[bool] = None
    closed_form_scale: Optional[Fraction] = None
    literal_hat_H: Optional[tuple[LieElement, ...]] = None
    literal_cybe_holds: Optional[bool] = None
    printed_hat_H: Optional[tuple[LieElement, ...]] = None
    printed_agrees: Optional[bool] = None
    printed_scale: Optional[Fraction] = None
    normative: bool = True
    eigenvalues: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False)

    @property
    def links(self) -> int:
        return len(self.hat_H)

    def r_J(self) -> BiTensor:
        """The additional Jordanian terms at ζ = ξ = 1."""
        return _jordanian_sum(self.n, self.jordanian_cartans, self.coordinates)

    def enlarged_chain(self) -> BiTensor:
        return build_chain_with_cartans(self.n, self.hat_H) + self.r_J()


def default_orthogonal_roots(n: int) -> tuple[int, ...]:
    """α_1, α_3, …: m roots for n = 2m+1 and m−1 roots for n = 2m."""
    links = link_count(n)
    count = links if n % 2 == 1 else links - 1
    return tuple(2 * k - 1 for k in range(1, count + 1))


def _coordinate(n: int, a: int) -> LieElement:
    """E_{a+1,a}, plus the mirrored unit E_{n−a,n+1−a} when the index pairs are disjoint."""
    element = matrix_unit(n, a + 1, a)
    if not {a, a + 1} & {n - a, n + 1 - a}:
        element = element + matrix_unit(n, n - a, n + 1 - a)
    return element


def _diagonal_row(n: int, weights: dict[int, Fraction]) -> SparseRow:
    """A linear form Σ_i w_i d_i on the diagonal, rewritten over H_{c,c+1} coordinates.

    With Cartan coordinates x_c the diagonal is d_i = x_i − x_{i−1} (x_0 = x_n = 0).
    """
    row = SparseRow()
    for i, w in weights.items():
        if i <= n - 1:
            row.iadd_coef(w, {i: 1})
        if i >= 2:
            row.iadd_coef(w, {i - 1: -1})
    return row


def orthogonal_cartans(n: int, roots: Sequence[int]) -> list[LieElement]:
    """Cartans H_k with θ_s(H_k) = 0 for every link and −α_{a_l}(H_k) = δ_kl."""
    links = link_count(n)
    cartans = []
    for k in range(len(roots)):
        system = LinearSystem(range(1, n))
        for s in range(1, links + 1):
            system.add_equation(_diagonal_row(n, {s: Fraction(1), n - s + 1: Fraction(-1)}), 0)
        for l, a in enumerate(roots):
            # −α_a(H) = d_{a+1} − d_a
            row = _diagonal_row(n, {a + 1: Fraction(1), a: Fraction(-1)})
            system.add_equation(row, Fraction(-1) if l == k else Fraction(0))
        if not system.consistent or system.nullity:
            raise InvalidInputError(
                f"Roots {list(roots)} do not determine the orthogonal Cartans of sl({n})"
            )
        solution = system.particular_solution()
        cartans.append(from_cartan_coordinates(n, [solution[c] for c in range(1, n)]))
    return cartans


def _jordanian_sum(
    n: int, cartans: Iterable[LieElement], coordinates: Iterable[LieElement]
) -> BiTensor:
    total = BiTensor.zero(n)
    for cartan, coordinate in zip(cartans, coordinates):
        total = total + wedge(cartan, coordinate)
    return total


def _collect_equations(
    constant: TriTensor, columns: dict[tuple[int, int], TriTensor]
) -> dict[tuple, tuple[dict[tuple[int, int], Fraction], Fraction]]:
    equations: dict[tuple, dict[tuple[int, int], Fraction]] = defaultdict(dict)
    for unknown, column in columns.items():
        for key, value in column.items():
            equations[key][unknown] = value
    for key, _ in constant.items():
        equations.setdefault(key, {})
    return {key: (coeffs, constant.coefficient(key)) for key, coeffs in equations.items()}


def _eigenvalues(n: int, hat_H: Sequence[LieElement]) -> tuple[tuple[Fraction, ...], ...]:
    links = link_count(n)
    return tuple(
        tuple(root_eval(theta(n, l), h) for l in range(1, links + 1)) for h in hat_H
    )


def _common_eigenvalue(eigenvalues: Sequence[Sequence[Fraction]]) -> Optional[Fraction]:
    c = eigenvalues[0][0] if eigenvalues else None
    for k, row in enumerate(eigenvalues):
        for l, value in enumerate(row):
            if value != (c if k == l else 0):
                return None
    return c


def _span_coefficients(
    target: LieElement, basis: Sequence[LieElement]
) -> Optional[tuple[Fraction, ...]]:
    """Coefficients of a diagonal element on a list of diagonal elements, if any."""
    system = LinearSystem(range(len(basis)))
    for i in range(1, target.n + 1):
        row = {l: element.entry(i, i) for l, element in enumerate(basis)}
        system.add_equation(row, -target.entry(i, i))
    if not system.consistent:
        return None
    solution = system.particular_solution()
    return tuple(solution[l] for l in range(len(basis)))


def _common_scale(
    targets: Sequence[LieElement], sources: Sequence[LieElement]
) -> Optional[Fraction]:
    """s with targets[k] = s · sources[k] for every k, if one exists."""
    scale: Optional[Fraction] = None
    for target, source in zip(targets, sources):
        if source.is_zero():
            if not target.is_zero():
                return None
            continue
        (i, j), value = next(source.items())
        candidate = target.entry(i, j) / value
        if scale is None:
            scale = candidate
        if candidate != scale or source * scale != target:
            return None
    return scale


def solve_enlargement(
    n: int,
    exploratory: bool = False,
    orthogonal_roots: Optional[Sequence[int]] = None,
) -> EnlargementSolution:
    """Derive Ĥ_k from the vanishing of [[r_rch(Ĥ), r_J]] + [[r_J, r_rch(Ĥ)]].

    Args:
        n: Matrix size; odd unless ``exploratory`` is set.
        exploratory: Allow even n (the result is marked non-normative).
        orthogonal_roots: Indices a of the simple roots α_a that carry the
            additional Jordanian terms; defaults to α_1, α_3, ….

    Raises:
        InvalidInputError: For even n without ``exploratory`` or bad root indices.
        InconsistentSystemError: If the linear conditions have no solution.
    """
    links = link_count(n)
    if n % 2 == 0 and not exploratory:
        raise InvalidInputError(f"n={n} is even; use the exploratory mode")
    roots = tuple(orthogonal_roots) if orthogonal_roots is not None else default_orthogonal_roots(n)
    for a in roots:
        if not 1 <= a <= n - 1:
            raise InvalidInputError(f"Simple root index {a} out of range 1..{n - 1}")
    normative = n % 2 == 1 and orthogonal_roots is None

    if normative:
        cartans_perp = [h_perp(n, k) for k in range(1, links + 1)]
        coordinates = build_E_hat(n)
    else:
        cartans_perp = orthogonal_cartans(n, roots)
        coordinates = [_coordinate(n, a) for a in roots]
    r_J = _jordanian_sum(n, cartans_perp, coordinates)

    extension = BiTensor.zero(n)
    for k in range(1, links + 1):
        extension = extension + chain_extension(n, k)
    unknowns = [(k, c) for k in range(1, links + 1) for c in range(1, n)]
    columns = {
        (k, c): mixed_schouten(wedge(cartan_H(n, c, c + 1), highest_root_unit(n, k)), r_J)
        for k, c in unknowns
    }
    equations = _collect_equations(mixed_schouten(extension, r_J), columns)

    system = LinearSystem(unknowns)
    for _, (coefficients, constant) in sorted(equations.items()):
        system.add_equation(coefficients, constant)
    logger.debug(
        f"sl({n}) enlargement: {len(unknowns)} unknowns, {system.equation_count} equations, "
        f"rank {system.rank}"
    )
    if not system.consistent:
        raise InconsistentSystemError(
            f"The enlargement conditions for sl({n}) have no solution",
            residual=system.inconsistent_equation,
        )

    solution = system.particular_solution()
    hat_H = tuple(
        from_cartan_coordinates(n, [solution[(k, c)] for c in range(1, n)])
        for k in range(1, links + 1)
    )
    eigenvalues = _eigenvalues(n, hat_H)
    c = _common_eigenvalue(eigenvalues)
    enlarged = build_chain_with_cartans(n, hat_H) + r_J
    cybe_holds = is_cybe_solution(enlarged).holds

    gamma: Optional[tuple[tuple[Fraction, ...], ...]] = None
    if c is not None and c in (1, 2):
        rows = []
        for k, h in enumerate(hat_H, start=1):
            coefficients = _span_coefficients(
                h - half_H(n, k, n - k + 1, c.numerator), cartans_perp
            )
            if coefficients is None:
                break
            rows.append(coefficients)
        else:
            gamma = tuple(rows)

    closed_form_agrees: Optional[bool] = None
    closed_form_scale: Optional[Fraction] = None
    literal_hat_H: Optional[tuple[LieElement, ...]] = None
    literal_cybe_holds: Optional[bool] = None
    printed: Optional[tuple[LieElement, ...]] = None
    printed_agrees: Optional[bool] = None
    printed_scale: Optional[Fraction] = None
    if normative:
        closed = [hat_H_closed(n, k) for k in range(1, links + 1)]
        closed_form_agrees = list(hat_H) == closed
        closed_form_scale = _common_scale(closed, hat_H)
        if not closed_form_agrees:
            logger.warning(f"sl({n}): closed-form Cartans differ from the solved ones")
        printed = tuple(hat_H_printed(n, k) for k in range(1, links + 1))
        printed_agrees = printed == hat_H
        printed_scale = _common_scale(printed, hat_H)
        if printed_scale is None:
            logger.info(f"sl({n}): tabulated Cartan sums are not a multiple of the solved ones")
    if gamma is not None:
        literal_hat_H = tuple(
            cartan_H(n, k, n - k + 1)
            + sum(
                (h * g for h, g in zip(cartans_perp, gamma[k - 1])), LieElement.zero(n)
            )
            for k in range(1, links + 1)
        )
        literal = build_chain_with_cartans(n, literal_hat_H) + r_J
        literal_cybe_holds = is_cybe_solution(literal).holds

    logger.info(
        f"Solved sl({n}) enlargement: unique={system.nullity == 0}, c={c}, CYBE={cybe_holds}"
    )
    return EnlargementSolution(
        n=n,
        hat_H=hat_H,
        jordanian_cartans=tuple(cartans_perp),
        coordinates=tuple(coordinates),
        orthogonal_roots=roots,
        unique=system.nullity == 0,
        solution_space_dim=system.nullity,
        equation_count=system.equation_count,
        normalization_c=c,
        gamma=gamma,
        cybe_holds=cybe_holds,
        closed_form_agrees=closed_form_agrees,
        closed_form_scale=closed_form_scale,
        literal_hat_H=literal_hat_H,
        literal_cybe_holds=literal_cybe_holds,
        printed_hat_H=printed,
        printed_agrees=printed_agrees,
        printed_scale=printed_scale,
        normative=normative,
        eigenvalues=eigenvalues,
    )


class EnlargementSolver:
    """Caches enlargement solutions per size and root choice."""

    def __init__(self) -> None:
        self._solutions: dict[tuple[int, bool, Optional[tuple[int, ...]]], EnlargementSolution] = {}

    def solve(
        self,
        n: int,
        exploratory: bool = False,
        orthogonal_roots: Optional[Sequence[int]] = None,
    ) -> EnlargementSolution:
        roots = tuple(orthogonal_roots) if orthogonal_roots is not None else None
        key = (n, exploratory, roots)
        if key not in self._solutions:
            self._solutions[key] = solve_enlargement(n, exploratory, roots)
        return self._solutions[key]

    def cached_sizes(self) -> list[int]:
        return sorted({n for n, _, _ in self._solutions})

    def clear(self) -> None:
        self._solutions.clear()


_default_solver = EnlargementSolver()


def build_ech(
    n: int,
    xi: ParamList = None,
    zeta: ParamList = None,
    solution: Optional[EnlargementSolution] = None,
    indeterminate: Optional[Fraction] = None,
) -> BiTensor:
    """The enlarged chain

        Σ_l ξ_l (Ĥ_l ∧ E_{l,n−l+1} + extension_l) + ζ_l H_l^⊥ ∧ Ê_l(ξ)

    with Ĥ from the solver (the module-level cache unless ``solution`` is given).
    """
    solved = solution or _default_solver.solve(n)
    if solved.n != n or not solved.normative:
        raise InvalidInputError(f"Need a normative enlargement solution for sl({n})")
    links = link_count(n)
    xi_values = coerce_params(xi, links, "xi")
    return build_chain_with_cartans(n, solved.hat_H, xi_values) + build_rJ(
        n, zeta, xi_values, indeterminate
    )


def rch_with_solved_cartans(
    n: int, xi: ParamList = None, solution: Optional[EnlargementSolution] = None
) -> BiTensor:
    """The rotated chain carrying the solved Ĥ (the ζ → 0 limit of ``build_ech``)."""
    solved = solution or _default_solver.solve(n)
    return build_chain_with_cartans(n, solved.hat_H, xi)


def switch_off_sequence(
    n: int, xi: ParamList = None, zeta: ParamList = None
) -> list[tuple[tuple[Fraction, ...], BiTensor]]:
    """Enlarged chains with ξ_1, then ξ_1 and ξ_2, … switched off.

    Ratios in Ê_l(ξ) that degenerate to 0/0 are set to 1.

    Returns:
        One (ξ, r) pair per step, ending with every link switched off.
    """
    links = link_count(n)
    xi_values = coerce_params(xi, links, "xi")
    steps = []
    for j in range(1, links + 1):
        current = tuple([Fraction(0)] * j + xi_values[j:])
        steps.append((current, build_ech(n, current, zeta, indeterminate=Fraction(1))))
    return steps


def switch_off_jordanian(n: int, xi: ParamList, zeta: ParamList, k: int) -> BiTensor:
    """The enlarged chain with the k-th additional Jordanian term removed."""
    links = link_count(n)
    if not 1 <= k <= links:
        raise InvalidInputError(f"k must be in 1..{links}, got {k}")
    zeta_values = coerce_params(zeta, links, "zeta")
    zeta_values[k - 1] = Fraction(0)
    return build_ech(n, xi, zeta_values)
