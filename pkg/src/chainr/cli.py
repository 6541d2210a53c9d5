"""CLI module for the chainr command."""

import logging
import sys
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .builders import EnlargementSolver
from .commands.analyze import AnalyzeCommand
from .commands.build import BuildCommand
from .commands.registry import default_registry
from .commands.roots import RootsCommand
from .commands.solve import SolveCommand
from .commands.verify import VerifyCommand
from .config import ChainrConfig, get_config
from .container import ChainrContainer, SimpleContainer, configure_container, create_container
from .dual import CHAIN_KINDS


def setup_logging(verbose: bool, console: Console) -> None:
    """Route log records through rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=verbose)],
        force=True,
    )


def build_container(console: Console, config: Optional[ChainrConfig] = None) -> SimpleContainer:
    """Wire the application container and expose its services to a command."""
    config = config or get_config()
    app: ChainrContainer = create_container()
    configure_container(app, console=console, config=config.config_data)

    container = SimpleContainer()
    container.register(Console, app.console())
    container.register(ChainrConfig, config)
    container.register_factory(EnlargementSolver, app.solver)
    return container


def _container(ctx: click.Context) -> SimpleContainer:
    obj = ctx.find_object(dict) or {}
    console = obj.get("console") or Console(stderr=True)
    return build_container(console)


@click.group(invoke_without_command=True)
@click.option("--verbose", "-v", is_flag=True, help="Enable debug logging")
@click.version_option(__version__, prog_name="chainr")
@click.pass_context
def main(ctx: click.Context, verbose: bool) -> None:
    """Chain r-matrices of sl(n): build, verify, solve, analyze, classify."""
    console = Console(stderr=True)
    setup_logging(verbose, console)
    ctx.ensure_object(dict)
    ctx.obj["console"] = console

    if ctx.invoked_subcommand is None:
        registry = default_registry()
        container = build_container(console)
        console.print("[bold]chainr[/bold]")
        console.print("Available commands:")
        for cmd_name in sorted(registry.list_commands()):
            instance = registry.create_command(cmd_name, container)
            description = instance.description if instance else "Command available"
            console.print(f"  [cyan]{cmd_name}[/cyan] - {description}")
        console.print("\nUse 'chainr <command> --help' for the options of a command.")


@main.command()
@click.option(
    "--kind",
    type=click.Choice(CHAIN_KINDS),
    default="rch",
    show_default=True,
    help="Chain family to build",
)
@click.option("--n", "n", type=int, required=True, help="Matrix size of sl(n)")
@click.option("--xi", type=str, default=None, help="Chain parameters, e.g. 1,-2/3,5")
@click.option("--zeta", type=str, default=None, help="Jordanian parameters (rJ, ech)")
@click.option("--seed", type=int, default=None, help="Draw missing parameters at random")
@click.option(
    "--normalization",
    type=click.IntRange(1, 2),
    default=None,
    help="Cartan normalization c (1 satisfies the CYBE, 2 is the printed scaling)",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file")
@click.pass_context
def build(
    ctx: click.Context,
    kind: str,
    n: int,
    xi: Optional[str],
    zeta: Optional[str],
    seed: Optional[int],
    normalization: Optional[int],
    out: Optional[str],
) -> None:
    """Build a chain r-matrix and write it as canonical JSON."""
    command = BuildCommand(_container(ctx))
    sys.exit(
        command.run(
            kind=kind, n=n, xi=xi, zeta=zeta, seed=seed, normalization=normalization, out=out
        )
    )


@main.command()
@click.option("--in", "in_path", type=str, required=True, help="Tensor JSON file")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Report file")
@click.pass_context
def verify(ctx: click.Context, in_path: str, out: Optional[str]) -> None:
    """Check the classical Yang-Baxter equation exactly (exit 1 if it fails)."""
    sys.exit(VerifyCommand(_container(ctx)).run(in_path=in_path, out=out))


@main.command()
@click.option("--n", "n", type=int, required=True, help="Matrix size of sl(n)")
@click.option("--exploratory", is_flag=True, help="Allow even n (non-normative output)")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Solution file")
@click.pass_context
def solve(ctx: click.Context, n: int, exploratory: bool, out: Optional[str]) -> None:
    """Solve for the Cartan elements of the enlarged chain (exit 3 if inconsistent)."""
    sys.exit(SolveCommand(_container(ctx)).run(n=n, exploratory=exploratory, out=out))


@main.command()
@click.option("--in", "in_path", type=str, required=True, help="Build artifact")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Report file")
@click.pass_context
def analyze(ctx: click.Context, in_path: str, out: Optional[str]) -> None:
    """Analyze the carrier and the dual algebra of a built chain."""
    sys.exit(AnalyzeCommand(_container(ctx)).run(in_path=in_path, out=out))


@main.command()
@click.option("--series", type=str, required=True, help="A, B, C or D")
@click.option("--rank", type=int, required=True, help="Rank of the root system")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Report file")
@click.pass_context
def roots(ctx: click.Context, series: str, rank: int, out: Optional[str]) -> None:
    """Classify a classical root system as type I or II."""
    sys.exit(RootsCommand(_container(ctx)).run(series=series, rank=rank, out=out))


if __name__ == "__main__":
    main()
