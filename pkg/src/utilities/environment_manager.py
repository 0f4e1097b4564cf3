"""
Environment Manager for springeriso.

Configuration comes from process environment variables, optionally seeded from
a `.env` file (and `.env.<SPRINGER_ENV>`) in the project root. Every variable
the package reads is registered here with its default and constraints, and
`get_settings()` snapshots them into a typed `RuntimeSettings` model.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, TypeVar, cast

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .singleton import Singleton
from .exceptions import (
    EnvironmentVariableNotFoundError,
    EnvironmentVariableValidationError,
    EnvironmentLoadError,
)
from .validation import (
    validate_env_var_type,
    validate_env_var_pattern,
    validate_env_var_options,
)

logger = logging.getLogger(__name__)

T = TypeVar('T')

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class RuntimeSettings(BaseModel):
    """Typed snapshot of the registered configuration variables."""

    log_level: str = "WARNING"
    debug: bool = False
    seed: int = 42
    budget: int = Field(default=2 ** 24, ge=1)
    workers: int = Field(default=4, ge=1)
    samples: int = Field(default=100, ge=1)
    max_ring_order: int = Field(default=1024, ge=2)
    oracle_max_positive_roots: int = Field(default=12, ge=0)


class EnvironmentManager(metaclass=Singleton):
    """
    Registry and accessor for configuration variables.

    Variables are registered with a default, an optional regex pattern and an
    optional closed list of options; a value that is already set is validated
    at registration time.
    """

    def __init__(self, project_root: Optional[Path] = None) -> None:
        """
        Initialize the manager and load `.env` files.

        Args:
            project_root: Directory searched for `.env` files. Defaults to the
                repository root.
        """
        self._registry: Dict[str, Dict[str, Any]] = {}
        self._loaded_files: List[str] = []
        self._project_root = project_root or PROJECT_ROOT

        self._load_env_files()
        self._register_common_vars()

    def _load_env_files(self) -> None:
        """Load `.env` and the environment-specific `.env.<name>` file if present."""
        env_files = [self._project_root / ".env"]
        env_name = os.environ.get("SPRINGER_ENV")
        if env_name:
            env_files.append(self._project_root / f".env.{env_name.lower()}")

        for env_file in env_files:
            if env_file.exists() and env_file.is_file():
                try:
                    load_dotenv(dotenv_path=str(env_file), override=True)
                    self._loaded_files.append(str(env_file))
                except Exception as e:
                    raise EnvironmentLoadError(f"Failed to load environment file {env_file}: {e}")
                logger.debug("loaded environment file %s", env_file)

    def _register_common_vars(self) -> None:
        """Register every variable the package reads."""
        int_pattern = r"^\d+$"
        self.register_var("LOG_LEVEL", default="WARNING",
                          description="Log level for the rich logging handler",
                          options=LOG_LEVELS)
        self.register_var("SPRINGER_DEBUG", default="false",
                          description="Print full tracebacks when the CLI crashes")
        self.register_var("SPRINGER_SEED", default="42", pattern=int_pattern,
                          description="Default seed for sampled checks")
        self.register_var("SPRINGER_BUDGET", default=str(2 ** 24), pattern=int_pattern,
                          description="Maximum number of candidates an enumeration may visit")
        self.register_var("SPRINGER_WORKERS", default="4", pattern=int_pattern,
                          description="Worker threads used by sharded enumeration")
        self.register_var("SPRINGER_SAMPLES", default="100", pattern=int_pattern,
                          description="Samples drawn by randomized checks")
        self.register_var("SPRINGER_MAX_RING_ORDER", default="1024", pattern=int_pattern,
                          description="Largest ring order with precomputed arithmetic tables")
        self.register_var("SPRINGER_ORACLE_MAX_POSITIVE_ROOTS", default="12", pattern=int_pattern,
                          description="Largest root system handled by the brute-force subsystem oracle")

    def register_var(self, name: str, default: Optional[str] = None,
                     description: Optional[str] = None, required: bool = False,
                     pattern: Optional[str] = None, options: Optional[List[str]] = None) -> None:
        """
        Register a variable with its metadata.

        Args:
            name: The variable name.
            default: Value used when the variable is unset.
            description: Human-readable description.
            required: Whether the variable must be set.
            pattern: Regular expression the value must match.
            options: Closed list of allowed values.

        Raises:
            ValueError: If the name is empty.
            EnvironmentVariableValidationError: If a set value violates the
                constraints or a required variable is missing.
        """
        if not name:
            raise ValueError("Environment variable name cannot be empty")

        self._registry[name] = {
            "default": default,
            "description": description,
            "required": required,
            "pattern": pattern,
            "options": options,
        }

        if required and not self.has_var(name):
            raise EnvironmentVariableValidationError(
                f"Required environment variable '{name}' is not set"
            )

        if self.has_var(name):
            value = os.environ[name]
            if pattern:
                validate_env_var_pattern(value, pattern, name)
            if options:
                validate_env_var_options(value, options, name)

    def has_var(self, name: str) -> bool:
        """Return True if the variable is set in the process environment."""
        return name in os.environ

    def get_var(self, name: str, default: Optional[str] = None) -> str:
        """
        Get a variable as a string.

        Lookup order: process environment, registered default, the default
        argument.

        Raises:
            EnvironmentVariableNotFoundError: If nothing provides a value.
        """
        if name in os.environ:
            return os.environ[name]

        if name in self._registry and self._registry[name]["default"] is not None:
            return cast(str, self._registry[name]["default"])

        if default is not None:
            return default

        raise EnvironmentVariableNotFoundError(f"Environment variable '{name}' not found")

    def get_var_as(self, name: str, type_func: Type[T], default: Optional[T] = None) -> T:
        """
        Get a variable converted with type_func.

        Raises:
            EnvironmentVariableNotFoundError: If the variable has no value.
            EnvironmentVariableValidationError: If the conversion fails.
        """
        if not self.has_var(name) and default is not None:
            return default
        return validate_env_var_type(self.get_var(name), type_func, name)

    def get_var_as_int(self, name: str, default: Optional[int] = None) -> int:
        """Get a variable as an integer."""
        return self.get_var_as(name, int, default)

    def get_var_as_bool(self, name: str, default: Optional[bool] = None) -> bool:
        """
        Get a variable as a boolean.

        Accepts true/yes/1/y/t and false/no/0/n/f, case-insensitively.

        Raises:
            EnvironmentVariableValidationError: For any other value.
        """
        if not self.has_var(name) and default is not None:
            return default

        value = self.get_var(name).lower()
        if value in ("true", "yes", "1", "y", "t"):
            return True
        if value in ("false", "no", "0", "n", "f"):
            return False
        raise EnvironmentVariableValidationError(
            f"Environment variable '{name}' value '{value}' cannot be converted to boolean"
        )

    def set_var(self, name: str, value: str) -> None:
        """
        Set a variable for the current process, validating registered constraints.

        Raises:
            EnvironmentVariableValidationError: If the value violates the constraints.
        """
        if name in self._registry:
            pattern = self._registry[name]["pattern"]
            if pattern:
                validate_env_var_pattern(value, pattern, name)
            options = self._registry[name]["options"]
            if options:
                validate_env_var_options(value, options, name)
        os.environ[name] = value

    def get_registered_vars(self) -> Dict[str, Dict[str, Any]]:
        """Return a copy of the registry."""
        return self._registry.copy()

    def get_loaded_files(self) -> List[str]:
        """Return the `.env` files that were loaded."""
        return self._loaded_files.copy()

    def settings(self) -> RuntimeSettings:
        """Snapshot the registered variables into a RuntimeSettings model."""
        return RuntimeSettings(
            log_level=self.get_var("LOG_LEVEL"),
            debug=self.get_var_as_bool("SPRINGER_DEBUG"),
            seed=self.get_var_as_int("SPRINGER_SEED"),
            budget=self.get_var_as_int("SPRINGER_BUDGET"),
            workers=self.get_var_as_int("SPRINGER_WORKERS"),
            samples=self.get_var_as_int("SPRINGER_SAMPLES"),
            max_ring_order=self.get_var_as_int("SPRINGER_MAX_RING_ORDER"),
            oracle_max_positive_roots=self.get_var_as_int("SPRINGER_ORACLE_MAX_POSITIVE_ROOTS"),
        )


def get_environment_manager() -> EnvironmentManager:
    """Return the singleton EnvironmentManager."""
    return EnvironmentManager()


def get_settings() -> RuntimeSettings:
    """Return the current runtime settings."""
    return get_environment_manager().settings()
