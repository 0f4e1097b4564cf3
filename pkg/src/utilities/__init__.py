"""
Shared infrastructure for springeriso.

Console output, configuration and the exception hierarchy used by every
algebra package and by the CLI.
"""

from .environment_manager import EnvironmentManager, RuntimeSettings, get_environment_manager, get_settings
from .console_manager import ConsoleManager, get_console_manager, OutputFormat

__all__ = [
    'EnvironmentManager',
    'RuntimeSettings',
    'get_environment_manager',
    'get_settings',
    'ConsoleManager',
    'get_console_manager',
    'OutputFormat',
]
