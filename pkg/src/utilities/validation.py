"""
Validation helpers.

Two groups of validators live here: conversions for configuration variables,
raising EnvironmentVariableValidationError, and argument checks shared by the
algebra packages, raising InputError subclasses.
"""

import re
from typing import Callable, Sequence, TypeVar

from sympy import isprime

from .exceptions import EnvironmentVariableValidationError, InputError

T = TypeVar('T')


def validate_env_var_type(value: str, type_func: Callable[[str], T], var_name: str) -> T:
    """
    Convert a configuration value with type_func.

    Args:
        value: The raw variable value.
        type_func: The conversion function.
        var_name: The variable name, for error messages.

    Returns:
        The converted value.

    Raises:
        EnvironmentVariableValidationError: If the conversion fails.
    """
    try:
        return type_func(value)
    except (ValueError, TypeError) as e:
        raise EnvironmentVariableValidationError(
            f"Environment variable '{var_name}' value '{value}' cannot be converted to "
            f"{getattr(type_func, '__name__', type_func)}: {e}"
        )


def validate_env_var_pattern(value: str, pattern: str, var_name: str) -> str:
    """
    Check a configuration value against a regular expression.

    Raises:
        EnvironmentVariableValidationError: If the value does not match.
    """
    if not re.match(pattern, value):
        raise EnvironmentVariableValidationError(
            f"Environment variable '{var_name}' value '{value}' does not match pattern '{pattern}'"
        )
    return value


def validate_env_var_options(value: str, options: Sequence[str], var_name: str) -> str:
    """
    Check a configuration value against a closed list of options.

    Raises:
        EnvironmentVariableValidationError: If the value is not one of the options.
    """
    if value not in options:
        raise EnvironmentVariableValidationError(
            f"Environment variable '{var_name}' value '{value}' is not one of {list(options)}"
        )
    return value


def validate_prime(p: int, what: str = "p") -> int:
    """
    Require p to be a prime number.

    Args:
        p: The candidate prime.
        what: The argument name used in the error message.

    Returns:
        p, unchanged.

    Raises:
        InputError: If p is not prime.
    """
    if not isinstance(p, int) or not isprime(p):
        raise InputError(f"{what} must be a prime, got {p!r}")
    return p


def validate_characteristic(p: int) -> int:
    """Require p to be zero (characteristic zero) or a prime."""
    if p == 0:
        return 0
    return validate_prime(p, "characteristic")


def validate_positive(value: int, what: str) -> int:
    """Require a positive integer."""
    if not isinstance(value, int) or value < 1:
        raise InputError(f"{what} must be a positive integer, got {value!r}")
    return value


def validate_index(i: int, rank: int) -> int:
    """Require 1 <= i <= rank for a simple-root index."""
    if not isinstance(i, int) or not 1 <= i <= rank:
        raise InputError(f"simple root index must lie in 1..{rank}, got {i!r}")
    return i
