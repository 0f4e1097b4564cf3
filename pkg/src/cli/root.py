"""
Root command for the springeriso CLI.

This module defines the root app, registers every command and resolves the
global options into the shared GlobalContext.
"""

import logging
from typing import Optional

import typer

from src import __version__
from src.cli.commands import centralizer, descent, folding, primes, verify
from src.utilities.console_manager import OutputFormat, get_console_manager
from src.utilities.environment_manager import get_environment_manager

# Create the root app
app = typer.Typer(
    name="springeriso",
    help="Springer isomorphisms, good primes and finite verification suites",
    no_args_is_help=True,
)

# Register commands
app.command("classify")(primes.classify)
app.command("table1")(primes.table1)
app.command("exists")(primes.exists)
app.command("fold")(folding.fold)
app.command("centralizer")(centralizer.centralizer)
app.command("verify-d4")(verify.verify_d4)
app.command("verify-springer")(verify.verify_springer)
app.command("solve-descent")(descent.solve_descent)
app.command("verify-all")(verify.verify_all)


def _version_callback(value: bool) -> None:
    if value:
        get_console_manager().print(f"springeriso {__version__}")
        raise typer.Exit()


@app.callback()
def callback(
    json_output: bool = typer.Option(True, "--json/--text", help="JSON output (default) or rich tables"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging on stderr"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for sampled checks [SPRINGER_SEED]"),
    budget: Optional[int] = typer.Option(None, "--budget", help="Enumeration cap [SPRINGER_BUDGET]"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Enumeration threads [SPRINGER_WORKERS]"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Samples per randomized check [SPRINGER_SAMPLES]"),
    timings: bool = typer.Option(False, "--timings", help="Record per-check runtimes"),
    version: Optional[bool] = typer.Option(
        None, "--version", callback=_version_callback, is_eager=True, help="Show the version and exit"),
):
    """
    Springer isomorphisms, good primes and finite verification suites.

    Every command prints JSON by default and exits 0 on success, 1 when a
    check fails and 2 on bad input.
    """
    from src.cli import common
    from src.cli.common import GlobalContext

    settings = get_environment_manager().settings()
    console = get_console_manager()
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    console.setup_logging(level=level)
    console.set_output_format(OutputFormat.JSON if json_output else OutputFormat.TEXT)

    common.global_context = GlobalContext(
        verbose=verbose,
        json_output=json_output,
        seed=seed if seed is not None else settings.seed,
        budget=budget if budget is not None else settings.budget,
        workers=workers if workers is not None else settings.workers,
        samples=samples if samples is not None else settings.samples,
        timings=timings,
    )
