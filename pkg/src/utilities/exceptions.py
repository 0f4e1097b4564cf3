"""
Custom exceptions for springeriso.

This module defines the exception hierarchy used throughout the package.
Everything derives from SpringerIsoError so callers can catch the whole
family at once; the CLI maps InputError to a usage exit code and any other
error to a failure exit code.
"""


class SpringerIsoError(Exception):
    """Base exception for all springeriso errors."""
    pass


class ConfigurationError(SpringerIsoError):
    """Base exception for all configuration-related errors."""
    pass


class EnvironmentVariableNotFoundError(ConfigurationError):
    """Exception raised when a requested environment variable is not found."""
    pass


class EnvironmentVariableValidationError(ConfigurationError):
    """Exception raised when environment variable validation fails."""
    pass


class EnvironmentLoadError(ConfigurationError):
    """Exception raised when loading environment variables fails."""
    pass


class InputError(SpringerIsoError):
    """Base exception for malformed or out-of-range user input."""
    pass


class InvalidRootTypeError(InputError):
    """Exception raised for an unknown or invalid (family, rank) pair."""
    pass


class AutomorphismError(InputError):
    """Exception raised when a permutation does not preserve the Cartan matrix."""
    pass


class RingSpecError(InputError):
    """Exception raised when a ring specification string cannot be parsed or built."""
    pass


class MatrixLiteralError(InputError):
    """Exception raised when a matrix literal cannot be parsed."""
    pass


class FlavorError(InputError):
    """Exception raised when an operation does not support a group or Lie flavor."""
    pass


class CoefficientError(InputError):
    """Exception raised for invalid Springer coefficients (e.g. a non-unit a1)."""
    pass


class ComputationError(SpringerIsoError):
    """Base exception for failures during a computation."""
    pass


class NonIntegralError(ComputationError):
    """Exception raised when a lattice vector has non-integral coordinates."""
    pass


class BudgetExceededError(ComputationError):
    """Exception raised when an enumeration would exceed the configured budget."""
    pass


class NotUnipotentError(ComputationError):
    """Exception raised when a unipotent element is required but not supplied."""
    pass


class StructureConstantError(ComputationError):
    """Exception raised when structure constants are inconsistent."""
    pass


class DescentError(ComputationError):
    """Exception raised when a descent coefficient system has no solution."""
    pass
