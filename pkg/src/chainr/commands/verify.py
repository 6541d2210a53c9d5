"""The ``verify`` command: exact CYBE check of a tensor file."""

from pathlib import Path
from typing import Optional, Union

from ..exceptions import InvalidInputError
from ..serialization import read_json, tensor_from_json, verdict_report
from ..tensor import is_cybe_solution
from .base import BaseCommand, ExitCode


class VerifyCommand(BaseCommand):
    """Check that a tensor file satisfies the classical Yang-Baxter equation."""

    def execute(
        self,
        in_path: Optional[Union[str, Path]] = None,
        out: Optional[Union[str, Path]] = None,
    ) -> int:
        if in_path is None:
            raise InvalidInputError("verify needs an input file (--in)")
        r = tensor_from_json(read_json(in_path))
        with self.show_progress(f"Schouten bracket of {len(r)} terms"):
            verdict = is_cybe_solution(r)

        preview = int(self.config.get_config_value("verify.preview_terms", 10))
        self.emit_json(verdict_report(verdict, preview), out)

        if verdict.holds:
            self.print_success("CYBE holds")
            return ExitCode.OK
        self.print_error(f"CYBE fails: {verdict.residual_term_count} residual terms")
        return ExitCode.CYBE_FAILED
