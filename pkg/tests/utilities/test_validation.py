"""
Tests for the validation helpers.
"""

import unittest

from src.utilities.exceptions import EnvironmentVariableValidationError, InputError, SpringerIsoError
from src.utilities.validation import (
    validate_characteristic,
    validate_env_var_options,
    validate_env_var_pattern,
    validate_env_var_type,
    validate_index,
    validate_positive,
    validate_prime,
)


class TestValidation(unittest.TestCase):

    def test_env_var_type(self):
        self.assertEqual(validate_env_var_type("12", int, "X"), 12)
        with self.assertRaises(EnvironmentVariableValidationError):
            validate_env_var_type("twelve", int, "X")

    def test_env_var_pattern_and_options(self):
        self.assertEqual(validate_env_var_pattern("42", r"^\d+$", "X"), "42")
        with self.assertRaises(EnvironmentVariableValidationError):
            validate_env_var_pattern("4a", r"^\d+$", "X")
        with self.assertRaises(EnvironmentVariableValidationError):
            validate_env_var_options("TRACE", ["DEBUG", "INFO"], "LOG_LEVEL")

    def test_prime(self):
        self.assertEqual(validate_prime(7), 7)
        for bad in (1, 4, 0, -3):
            with self.assertRaises(InputError):
                validate_prime(bad)

    def test_characteristic(self):
        self.assertEqual(validate_characteristic(0), 0)
        self.assertEqual(validate_characteristic(3), 3)
        with self.assertRaises(InputError):
            validate_characteristic(6)

    def test_positive_and_index(self):
        self.assertEqual(validate_positive(3, "n"), 3)
        with self.assertRaises(InputError):
            validate_positive(0, "n")
        self.assertEqual(validate_index(4, 4), 4)
        with self.assertRaises(InputError):
            validate_index(5, 4)

    def test_hierarchy(self):
        self.assertTrue(issubclass(InputError, SpringerIsoError))
        self.assertTrue(issubclass(EnvironmentVariableValidationError, SpringerIsoError))


if __name__ == "__main__":
    unittest.main()
