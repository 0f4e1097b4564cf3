"""
Tests for the Environment Manager utility.
"""

import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from src.utilities.environment_manager import EnvironmentManager, RuntimeSettings, get_environment_manager
from src.utilities.exceptions import (
    EnvironmentVariableNotFoundError,
    EnvironmentVariableValidationError,
)
from src.utilities.singleton import Singleton

MANAGED_VARS = [
    "LOG_LEVEL", "SPRINGER_DEBUG", "SPRINGER_SEED", "SPRINGER_BUDGET", "SPRINGER_WORKERS",
    "SPRINGER_SAMPLES", "SPRINGER_MAX_RING_ORDER", "SPRINGER_ORACLE_MAX_POSITIVE_ROOTS", "SPRINGER_ENV",
]


class TestEnvironmentManager(unittest.TestCase):
    """Tests for the EnvironmentManager class."""

    def setUp(self):
        """Start every test from a clean environment and an empty temp project."""
        Singleton.clear_instance(EnvironmentManager)
        self.env_patcher = patch.dict(os.environ, {}, clear=False)
        self.env_patcher.start()
        for name in MANAGED_VARS:
            os.environ.pop(name, None)
        self.temp_dir = tempfile.TemporaryDirectory()
        self.test_dir = Path(self.temp_dir.name)

    def tearDown(self):
        self.env_patcher.stop()
        self.temp_dir.cleanup()
        Singleton.clear_instance(EnvironmentManager)

    def test_singleton(self):
        em1 = EnvironmentManager(self.test_dir)
        em2 = EnvironmentManager()
        self.assertIs(em1, em2)
        self.assertIs(get_environment_manager(), em1)

    def test_defaults(self):
        em = EnvironmentManager(self.test_dir)
        self.assertEqual(em.get_var_as_int("SPRINGER_SEED"), 42)
        self.assertEqual(em.get_var_as_int("SPRINGER_BUDGET"), 2 ** 24)
        self.assertEqual(em.get_var_as_int("SPRINGER_WORKERS"), 4)
        self.assertEqual(em.get_var("LOG_LEVEL"), "WARNING")
        self.assertFalse(em.get_var_as_bool("SPRINGER_DEBUG"))

    def test_settings_snapshot(self):
        os.environ["SPRINGER_SAMPLES"] = "7"
        settings = EnvironmentManager(self.test_dir).settings()
        self.assertIsInstance(settings, RuntimeSettings)
        self.assertEqual(settings.samples, 7)
        self.assertEqual(settings.max_ring_order, 1024)
        self.assertEqual(settings.oracle_max_positive_roots, 12)

    def test_env_file_loaded(self):
        (self.test_dir / ".env").write_text("SPRINGER_SEED=11\n")
        em = EnvironmentManager(self.test_dir)
        self.assertEqual(em.get_var_as_int("SPRINGER_SEED"), 11)
        self.assertEqual(em.get_loaded_files(), [str(self.test_dir / ".env")])

    def test_environment_specific_file(self):
        (self.test_dir / ".env").write_text("SPRINGER_SEED=11\n")
        (self.test_dir / ".env.testing").write_text("SPRINGER_SEED=12\n")
        os.environ["SPRINGER_ENV"] = "testing"
        em = EnvironmentManager(self.test_dir)
        self.assertEqual(em.get_var_as_int("SPRINGER_SEED"), 12)

    def test_invalid_registered_value(self):
        os.environ["SPRINGER_WORKERS"] = "four"
        with self.assertRaises(EnvironmentVariableValidationError):
            EnvironmentManager(self.test_dir)

    def test_invalid_log_level(self):
        os.environ["LOG_LEVEL"] = "LOUD"
        with self.assertRaises(EnvironmentVariableValidationError):
            EnvironmentManager(self.test_dir)

    def test_missing_variable(self):
        em = EnvironmentManager(self.test_dir)
        with self.assertRaises(EnvironmentVariableNotFoundError):
            em.get_var("SPRINGER_NOT_REGISTERED")
        self.assertEqual(em.get_var("SPRINGER_NOT_REGISTERED", "x"), "x")

    def test_bool_conversion(self):
        em = EnvironmentManager(self.test_dir)
        em.set_var("SPRINGER_DEBUG", "yes")
        self.assertTrue(em.get_var_as_bool("SPRINGER_DEBUG"))
        em.set_var("SPRINGER_DEBUG", "maybe")
        with self.assertRaises(EnvironmentVariableValidationError):
            em.get_var_as_bool("SPRINGER_DEBUG")

    def test_set_var_validates_pattern(self):
        em = EnvironmentManager(self.test_dir)
        with self.assertRaises(EnvironmentVariableValidationError):
            em.set_var("SPRINGER_BUDGET", "-1")
        em.set_var("SPRINGER_BUDGET", "1000")
        self.assertEqual(em.get_var_as_int("SPRINGER_BUDGET"), 1000)

    def test_registry_contents(self):
        registered = EnvironmentManager(self.test_dir).get_registered_vars()
        for name in MANAGED_VARS[:-1]:
            self.assertIn(name, registered)


if __name__ == "__main__":
    unittest.main()
