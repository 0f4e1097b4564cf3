"""
Console Manager for springeriso.

Centralizes everything that reaches the terminal: JSON documents on stdout,
rich tables in text mode, error and warning lines on stderr, and the rich
logging handler. JSON goes through plain `print` so the bytes on stdout are a
pure function of the data.
"""

import json
import logging
from enum import Enum, auto
from typing import Any, Iterable, List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from rich.theme import Theme

from .singleton import Singleton


class OutputFormat(Enum):
    """Output formats understood by the CLI."""
    JSON = auto()
    TEXT = auto()


class ConsoleManager(metaclass=Singleton):
    """
    Process-wide console access.

    Attributes:
        console: Rich console for stdout.
        error_console: Rich console for stderr (errors, warnings, log records).
    """

    def __init__(self) -> None:
        """Create the consoles with the package theme; JSON output by default."""
        theme = Theme({
            "info": "cyan",
            "warning": "yellow",
            "error": "bold red",
            "success": "bold green",
            "fail": "bold red",
        })
        self.console = Console(theme=theme)
        self.error_console = Console(stderr=True, theme=theme)
        self._output_format = OutputFormat.JSON
        self._logger: Optional[logging.Logger] = None

    def set_output_format(self, format: OutputFormat) -> None:
        """Select JSON or text output."""
        self._output_format = format

    def get_output_format(self) -> OutputFormat:
        """Return the selected output format."""
        return self._output_format

    def print(self, message: Any, **kwargs: Any) -> None:
        """Print a message to stdout through rich."""
        self.console.print(message, **kwargs)

    def print_json(self, data: Any, indent: int = 2) -> None:
        """
        Print data as JSON.

        Args:
            data: A JSON-serializable object.
            indent: Indentation width.
        """
        print(json.dumps(data, indent=indent))

    def print_table(self, headers: Sequence[str], rows: Iterable[Sequence[Any]],
                    title: Optional[str] = None, **kwargs: Any) -> None:
        """
        Print rows as a rich table.

        Args:
            headers: Column headers.
            rows: Table rows; cells are converted with str().
            title: Optional table title.
        """
        table = Table(title=title, show_header=True, header_style="bold")
        for header in headers:
            table.add_column(str(header))
        for row in rows:
            table.add_row(*[str(cell) for cell in row])
        self.console.print(table, **kwargs)

    def print_error(self, message: str, **kwargs: Any) -> None:
        """Print an error line to stderr."""
        self.error_console.print(f"[bold red]Error:[/bold red] {message}", **kwargs)

    def print_warning(self, message: str, **kwargs: Any) -> None:
        """Print a warning line to stderr."""
        self.error_console.print(f"[warning]Warning:[/warning] {message}", **kwargs)

    def print_success(self, message: str, **kwargs: Any) -> None:
        """Print a success line to stdout."""
        self.console.print(f"[success]Success:[/success] {message}", **kwargs)

    def status_markup(self, passed: bool) -> str:
        """Rich markup for a pass/fail cell."""
        return "[success]pass[/success]" if passed else "[fail]FAIL[/fail]"

    def setup_logging(self, level: int = logging.WARNING, format: str = "%(message)s",
                      **kwargs: Any) -> logging.Logger:
        """
        Install a RichHandler on the root logger.

        Log records go to stderr so they never interleave with JSON output.
        Calling again only adjusts the level.

        Args:
            level: The logging level.
            format: The log format.
            **kwargs: Extra RichHandler arguments.

        Returns:
            The package logger.
        """
        if self._logger is None:
            handler = RichHandler(
                level=level,
                console=self.error_console,
                rich_tracebacks=True,
                tracebacks_show_locals=False,
                **kwargs,
            )
            logging.basicConfig(level=level, format=format, datefmt="[%X]", handlers=[handler])
            self._logger = logging.getLogger("src")
        logging.getLogger().setLevel(level)
        self._logger.setLevel(level)
        return self._logger

    def headers_for(self, records: List[dict]) -> List[str]:
        """Union of keys of a list of flat dicts, in first-seen order."""
        headers: List[str] = []
        for record in records:
            for key in record:
                if key not in headers:
                    headers.append(key)
        return headers


def get_console_manager() -> ConsoleManager:
    """Return the singleton ConsoleManager."""
    return ConsoleManager()
