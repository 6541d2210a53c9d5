"""The ``solve`` command: derive the Cartan elements of the enlarged chain."""

from pathlib import Path
from typing import Optional, Union

from rich.table import Table

from ..builders import EnlargementSolution
from ..lie import format_rational
from ..serialization import solution_report
from .base import BaseCommand, ExitCode


def solution_table(solution: EnlargementSolution) -> Table:
    """Diagonals of the solved Ĥ_k and the Jordanian Cartans H_k^⊥."""
    table = Table(title=f"Enlarged chain Cartans for sl({solution.n})")
    table.add_column("k", justify="right")
    table.add_column("Ĥ_k (diagonal)")
    table.add_column("H_k^⊥ (diagonal)")
    perps = list(solution.jordanian_cartans)
    for k, h in enumerate(solution.hat_H, start=1):
        perp = perps[k - 1] if k <= len(perps) else None
        table.add_row(
            str(k),
            " ".join(format_rational(x) for x in h.diagonal()),
            "" if perp is None else " ".join(format_rational(x) for x in perp.diagonal()),
        )
    return table


class SolveCommand(BaseCommand):
    """Solve the linear conditions that make the enlarged chain a CYBE solution."""

    def execute(
        self,
        n: int = 3,
        exploratory: bool = False,
        out: Optional[Union[str, Path]] = None,
    ) -> int:
        with self.show_progress(f"Solving enlargement for sl({n})"):
            solution = self.solver.solve(n, exploratory=exploratory)

        self.console.print(solution_table(solution))
        self.emit_json(solution_report(solution), out)

        if not solution.normative:
            self.print_warning("Exploratory result: not covered by the closed forms")
        if not solution.unique:
            self.print_warning(f"Solution space has dimension {solution.solution_space_dim}")
        if solution.closed_form_agrees is False:
            self.print_warning("Solved Cartans differ from the closed forms")

        if solution.cybe_holds:
            self.print_success(f"Enlarged chain on sl({n}) satisfies the CYBE")
            return ExitCode.OK
        self.print_error(f"Enlarged chain on sl({n}) fails the CYBE")
        return ExitCode.CYBE_FAILED
