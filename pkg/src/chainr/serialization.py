"""Canonical JSON for tensors, solutions and reports.

Rationals are written as "p/q" strings (denominator omitted when 1) and every
list is sorted, so byte equality of two files is semantic equality.
"""

import json
import logging
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .builders import EnlargementSolution
from .dual import AnalysisReport, ChainSpec
from .exceptions import InvalidInputError
from .lie import Index, LieElement, format_rational, rational
from .roots import Classification
from .tensor import BiTensor, CybeVerdict

logger = logging.getLogger(__name__)

JsonDict = dict[str, Any]


def dumps(payload: Any, indent: Optional[int] = 2) -> str:
    return json.dumps(payload, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def _unit(index: Index) -> JsonDict:
    return {"i": index[0], "j": index[1]}


def _read_unit(data: Any) -> Index:
    try:
        i, j = data["i"], data["j"]
    except (KeyError, TypeError):
        raise InvalidInputError(f"Malformed matrix unit: {data!r}") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)):
        raise InvalidInputError(f"Matrix unit indices must be integers: {data!r}")
    return i, j


def _rational_list(values: Optional[Sequence[Fraction]]) -> Optional[list[str]]:
    return None if values is None else [format_rational(v) for v in values]


def lie_to_json(element: LieElement) -> list[JsonDict]:
    return [{"i": i, "j": j, "c": format_rational(v)} for (i, j), v in element.items()]


def lie_from_json(n: int, data: Any) -> LieElement:
    if not isinstance(data, list):
        raise InvalidInputError("A Lie element must be a list of entries")
    entries: dict[Index, Fraction] = {}
    for record in data:
        unit = _read_unit(record)
        if unit in entries:
            raise InvalidInputError(f"Duplicate entry {unit}")
        entries[unit] = rational(record.get("c"))
    return LieElement(n, entries)


def tensor_to_json(r: BiTensor) -> JsonDict:
    return {
        "n": r.n,
        "terms": [
            {"left": _unit(left), "right": _unit(right), "c": format_rational(v)}
            for (left, right), v in r.items()
        ],
    }


def tensor_from_json(data: Any) -> BiTensor:
    """Parse a tensor document; a provenance header, if present, is ignored.

    Raises:
        InvalidInputError: On any structural problem.
    """
    if not isinstance(data, dict):
        raise InvalidInputError("Tensor file must hold a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError("Tensor file needs an integer 'n'")
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise InvalidInputError("Tensor file needs a 'terms' list")
    collected: dict[tuple[Index, Index], Fraction] = {}
    for term in terms:
        if not isinstance(term, dict):
            raise InvalidInputError(f"Malformed term: {term!r}")
        key = (_read_unit(term.get("left")), _read_unit(term.get("right")))
        if key in collected:
            raise InvalidInputError(f"Duplicate term {key}")
        collected[key] = rational(term.get("c"))
    return BiTensor(n, collected)  # type: ignore[arg-type]


def provenance(
    kind: str,
    n: int,
    xi: Optional[Sequence[Fraction]] = None,
    zeta: Optional[Sequence[Fraction]] = None,
    normalization_c: Optional[int] = None,
) -> JsonDict:
    return {
        "kind": kind,
        "n": n,
        "xi": _rational_list(xi),
        "zeta": _rational_list(zeta),
        "normalization_c": normalization_c,
    }


def build_document(r: BiTensor, header: JsonDict) -> JsonDict:
    """A build artifact: the tensor, its provenance and an unset certificate."""
    document = tensor_to_json(r)
    document["provenance"] = header
    document["certificate"] = None
    return document


def chain_spec_from_document(data: Any) -> Optional[ChainSpec]:
    """The chain description in a build artifact's provenance header, if any."""
    header = data.get("provenance") if isinstance(data, dict) else None
    if header is None:
        return None
    if not isinstance(header, dict):
        raise InvalidInputError("Malformed provenance header")

    def params(name: str) -> Optional[tuple[Fraction, ...]]:
        values = header.get(name)
        if values is None:
            return None
        if not isinstance(values, list):
            raise InvalidInputError(f"Provenance field {name!r} must be a list")
        return tuple(rational(v) for v in values)

    n = header.get("n", data.get("n"))
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError("Provenance header needs an integer 'n'")
    return ChainSpec(
        n=n,
        kind=header.get("kind"),  # type: ignore[arg-type]
        xi=params("xi"),
        zeta=params("zeta"),
        normalization=header.get("normalization_c") or 1,
    )


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Malformed JSON in {path}: {e}") from e
    except OSError as e:
        raise InvalidInputError(f"Cannot read {path}: {e}") from e


def write_json(path: Union[str, Path], payload: Any, indent: Optional[int] = 2) -> None:
    Path(path).write_text(dumps(payload, indent), encoding="utf-8")
    logger.debug(f"Wrote {path}")


def verdict_report(verdict: CybeVerdict, preview_terms: int = 10) -> JsonDict:
    return {
        "holds": verdict.holds,
        "residual_term_count": verdict.residual_term_count,
        "residual_preview": [
            {
                "legs": [_unit(leg) for leg in key],
                "c": format_rational(value),
            }
            for key, value in verdict.residual.leading_terms(preview_terms)
        ],
    }


def solution_report(solution: EnlargementSolution) -> JsonDict:
    gamma = solution.gamma
    return {
        "n": solution.n,
        "normative": solution.normative,
        "unique": solution.unique,
        "solution_space_dim": solution.solution_space_dim,
        "equation_count": solution.equation_count,
        "orthogonal_roots": list(solution.orthogonal_roots),
        "normalization_c": (
            None if solution.normalization_c is None else format_rational(solution.normalization_c)
        ),
        "gamma": None if gamma is None else [_rational_list(row) for row in gamma],
        "hat_H": [lie_to_json(h) for h in solution.hat_H],
        "jordanian_cartans": [lie_to_json(h) for h in solution.jordanian_cartans],
        "coordinates": [lie_to_json(e) for e in solution.coordinates],
        "cybe_holds": solution.cybe_holds,
        "closed_form_agrees": solution.closed_form_agrees,
        "closed_form_scale": (
            None
            if solution.closed_form_scale is None
            else format_rational(solution.closed_form_scale)
        ),
        "literal_hat_H": (
            None
            if solution.literal_hat_H is None
            else [lie_to_json(h) for h in solution.literal_hat_H]
        ),
        "literal_cybe_holds": solution.literal_cybe_holds,
        "printed_hat_H": (
            None
            if solution.printed_hat_H is None
            else [lie_to_json(h) for h in solution.printed_hat_H]
        ),
        "printed_agrees": solution.printed_agrees,
        "printed_scale": (
            None if solution.printed_scale is None else format_rational(solution.printed_scale)
        ),
    }


def classification_report(classification: Classification) -> JsonDict:
    filtration = classification.filtration
    return {
        "series": classification.series.value,
        "rank": classification.rank,
        "type": classification.type_tag.value,
        "f": classification.f,
        "thetas": [list(t.coords) for t in filtration.thetas],
        "dims": list(filtration.subspace_dims),
        "dim_last": classification.dim_last,
        "dim_before_last": classification.dim_before_last,
    }


def analysis_report(report: AnalysisReport) -> JsonDict:
    """The analysis document; ``attachable`` is the red quasiprimitive, non-primitive subset."""
    carrier = report.carrier
    violations = report.grading_violations
    return {
        "carrier_dim": carrier.dim,
        "contains_borel": carrier.contains_borel,
        "neg_dim": carrier.negative_intersection_dim,
        "abelian_ideal_ok": report.abelian_ideal_ok,
        "grading_violations": (
            None if violations is None else [[v.x, v.y, v.z] for v in violations]
        ),
        "primitive": sorted(report.primitive),
        "quasiprimitive": (
            None if report.quasiprimitive is None else sorted(report.quasiprimitive)
        ),
        "attachable": None if report.attachable is None else sorted(report.attachable),
        "diagram_agrees": report.diagram_agrees,
    }
