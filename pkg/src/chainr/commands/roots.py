"""The ``roots`` command: type I/II classification of a classical series."""

from pathlib import Path
from typing import Optional, Union

from rich.table import Table

from ..roots import Classification, classify_type
from ..serialization import classification_report
from .base import BaseCommand, ExitCode


def filtration_table(classification: Classification) -> Table:
    filtration = classification.filtration
    table = Table(
        title=(
            f"{classification.series.value}{classification.rank}: "
            f"type {classification.type_tag.value}, f={classification.f}"
        )
    )
    table.add_column("k", justify="right")
    table.add_column("θ_k")
    table.add_column("dim V_k", justify="right")
    dims = filtration.subspace_dims
    for k, theta in enumerate(filtration.thetas):
        table.add_row(str(k), str(list(theta.coords)), str(dims[k]))
    table.add_row(str(filtration.f), "-", str(dims[-1]))
    return table


class RootsCommand(BaseCommand):
    """Classify a classical root system by its highest-root filtration."""

    def execute(
        self,
        series: str = "A",
        rank: int = 2,
        out: Optional[Union[str, Path]] = None,
    ) -> int:
        classification = classify_type(series, rank)
        self.console.print(filtration_table(classification))
        self.emit_json(classification_report(classification), out)
        return ExitCode.OK
