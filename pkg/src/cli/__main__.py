#!/usr/bin/env python3
"""
springeriso CLI entry point.
"""

import sys

from rich.traceback import install

from src.cli.root import app
from src.utilities.console_manager import get_console_manager
from src.utilities.environment_manager import get_environment_manager

# Install rich traceback handler
install(show_locals=False)


def main() -> int:
    """
    Run the CLI.

    Commands exit through typer with their own codes; anything escaping them
    is reported here and mapped to exit code 1.

    Returns:
        int: Exit code.
    """
    try:
        app()
        return 0
    except Exception as e:
        console = get_console_manager()
        if get_environment_manager().get_var_as_bool("SPRINGER_DEBUG", False):
            console.error_console.print_exception()
        else:
            console.print_error(str(e))
        return 1


if __name__ == "__main__":
    sys.exit(main())
