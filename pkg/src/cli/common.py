"""
Common utilities for the springeriso CLI.

This module holds the global context filled in by the root callback, the
output helpers shared by every command and the mapping from exceptions to
exit codes.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, NoReturn, Optional, Sequence

import typer
from pydantic import BaseModel

from src import __version__
from src.reporting import SCHEMA_VERSION, VerdictReport, plain
from src.utilities.console_manager import get_console_manager
from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import InputError

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2

# Global context object
global_context = None


@dataclass
class GlobalContext:
    """
    Options given before the subcommand, resolved against the environment.

    Attributes:
        verbose: DEBUG logging.
        json_output: JSON (default) or rich text output.
        seed: Seed for sampled checks.
        budget: Enumeration cap.
        workers: Threads for sharded enumeration.
        samples: Samples per randomized check.
        timings: Include per-check runtimes in reports.
    """

    verbose: bool = False
    json_output: bool = True
    seed: int = 42
    budget: int = 1 << 24
    workers: int = 4
    samples: int = 100
    timings: bool = False
    extra_data: Dict[str, Any] = field(default_factory=dict)


def get_global_context() -> GlobalContext:
    """
    Get the global context object.

    Falls back to a context built from the environment when the root
    callback has not run (commands invoked programmatically).
    """
    global global_context
    if global_context is None:
        settings = get_environment_manager().settings()
        global_context = GlobalContext(seed=settings.seed, budget=settings.budget,
                                       workers=settings.workers, samples=settings.samples)
    return global_context


def fail(error: Exception) -> NoReturn:
    """
    Print an error and exit: code 2 for input errors, 1 otherwise.

    With SPRINGER_DEBUG set the traceback is printed as well.
    """
    console = get_console_manager()
    if get_environment_manager().get_var_as_bool("SPRINGER_DEBUG", False):
        console.error_console.print_exception()
    console.print_error(str(error))
    raise typer.Exit(code=EXIT_USAGE if isinstance(error, InputError) else EXIT_FAILURE)


def format_output(data: Any, title: Optional[str] = None) -> None:
    """
    Print a result document: JSON in JSON mode, a key/value table otherwise.

    Args:
        data: A pydantic model or a dict.
        title: Optional title for the text table.
    """
    ctx = get_global_context()
    console = get_console_manager()
    document = data.model_dump(mode="json") if isinstance(data, BaseModel) else plain(data)
    if ctx.json_output:
        console.print_json({"schema": SCHEMA_VERSION, "version": __version__, **document})
        return
    rows = [(key, _cell(value)) for key, value in document.items()]
    console.print_table(["Key", "Value"], rows, title=title)


def format_rows(rows: Sequence[Dict[str, Any]], title: Optional[str] = None,
                extra: Optional[Dict[str, Any]] = None) -> None:
    """Print a list of flat records: a JSON document with "rows", or one table."""
    ctx = get_global_context()
    console = get_console_manager()
    records = [plain(row) for row in rows]
    if ctx.json_output:
        console.print_json({"schema": SCHEMA_VERSION, "version": __version__, **(extra or {}), "rows": records})
        return
    headers = console.headers_for(records)
    console.print_table(headers, [[_cell(r.get(h, "")) for h in headers] for r in records], title=title)


def emit_report(report: VerdictReport) -> None:
    """
    Print a verdict report and exit 1 when it failed.

    Text mode prints one table per section (or one for the flat check list)
    and a summary line.
    """
    ctx = get_global_context()
    console = get_console_manager()
    if ctx.json_output:
        console.print_json(report.to_json_dict())
    else:
        groups = [(s.suite, s.checks) for s in report.sections] or [(report.suite, report.checks)]
        for name, checks in groups:
            rows: List[List[str]] = []
            for check in checks:
                row = [check.id, console.status_markup(check.passed), check.anchor]
                if ctx.timings:
                    row.append("" if check.runtime_ms is None else f"{check.runtime_ms:.1f}")
                rows.append(row)
            headers = ["Check", "Status", "Statement"] + (["ms"] if ctx.timings else [])
            console.print_table(headers, rows, title=name)
        total = len(report.checks) + sum(len(s.checks) for s in report.sections)
        failed = sum(not c.passed for c in report.checks) + sum(
            not c.passed for s in report.sections for c in s.checks)
        console.print(f"[bold]{report.suite}[/bold]: {total - failed}/{total} checks passed, "
                      f"seed {report.seed}, {console.status_markup(report.passed)}")
    if not report.passed:
        raise typer.Exit(code=EXIT_FAILURE)


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    return str(value)
