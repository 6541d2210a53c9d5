"""The ``analyze`` command: carrier and dual-algebra report of a build artifact."""

from pathlib import Path
from typing import Optional, Union

from ..dual import analyze
from ..exceptions import InvalidInputError, UnrecognizedStructureError
from ..serialization import analysis_report, chain_spec_from_document, read_json, tensor_from_json
from .base import BaseCommand, ExitCode


class AnalyzeCommand(BaseCommand):
    """Report the carrier, gradings and primitive generators of a built chain."""

    def execute(
        self,
        in_path: Optional[Union[str, Path]] = None,
        out: Optional[Union[str, Path]] = None,
    ) -> int:
        if in_path is None:
            raise InvalidInputError("analyze needs an input file (--in)")
        document = read_json(in_path)
        r = tensor_from_json(document)
        spec = chain_spec_from_document(document)
        if spec is None:
            raise UnrecognizedStructureError(
                f"{in_path} has no provenance header; build it with 'chainr build'"
            )

        with self.show_progress(f"Analyzing {spec.kind} on sl({spec.n})"):
            report = analyze(r, spec)

        self.emit_json(analysis_report(report), out)
        self.print_info(
            f"carrier dim {report.carrier.dim}, "
            f"Borel {'yes' if report.carrier.contains_borel else 'no'}, "
            f"negative part {report.carrier.negative_intersection_dim}"
        )
        if report.grading_violations:
            self.print_warning(f"{len(report.grading_violations)} grading violations")
        if report.diagram_agrees is False:
            self.print_warning("Diagram criterion disagrees with the bracket table")
        return ExitCode.OK
