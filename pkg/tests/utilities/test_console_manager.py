"""
Tests for the ConsoleManager class.
"""

import io
import json
import logging
import unittest
from unittest.mock import patch

from rich.console import Console

from src.utilities.console_manager import ConsoleManager, OutputFormat, get_console_manager
from src.utilities.singleton import Singleton


class TestConsoleManager(unittest.TestCase):
    """Test cases for the ConsoleManager class."""

    def setUp(self):
        Singleton.clear_instance(ConsoleManager)
        self.console_manager = ConsoleManager()
        self.out = io.StringIO()
        self.err = io.StringIO()
        self.console_manager.console = Console(file=self.out, width=200)
        self.console_manager.error_console = Console(file=self.err, width=200)

    def tearDown(self):
        Singleton.clear_instance(ConsoleManager)

    def test_singleton(self):
        self.assertIs(get_console_manager(), self.console_manager)

    def test_default_output_format(self):
        self.assertEqual(self.console_manager.get_output_format(), OutputFormat.JSON)
        self.console_manager.set_output_format(OutputFormat.TEXT)
        self.assertEqual(self.console_manager.get_output_format(), OutputFormat.TEXT)

    def test_print_json_is_plain(self):
        buffer = io.StringIO()
        with patch("sys.stdout", buffer):
            self.console_manager.print_json({"passed": True, "checks": [1, 2]})
        self.assertEqual(json.loads(buffer.getvalue()), {"passed": True, "checks": [1, 2]})

    def test_print_table(self):
        self.console_manager.print_table(["Check", "Status"], [["d4.jacobi", "pass"]], title="d4")
        output = self.out.getvalue()
        self.assertIn("d4.jacobi", output)
        self.assertIn("Status", output)

    def test_errors_go_to_stderr(self):
        self.console_manager.print_error("bad ring")
        self.assertIn("Error:", self.err.getvalue())
        self.assertIn("bad ring", self.err.getvalue())
        self.assertEqual(self.out.getvalue(), "")

    def test_status_markup(self):
        self.assertIn("pass", self.console_manager.status_markup(True))
        self.assertIn("FAIL", self.console_manager.status_markup(False))

    def test_headers_for(self):
        headers = self.console_manager.headers_for([{"a": 1, "b": 2}, {"b": 3, "c": 4}])
        self.assertEqual(headers, ["a", "b", "c"])

    def test_setup_logging_adjusts_level(self):
        logger = self.console_manager.setup_logging(level=logging.INFO)
        self.assertEqual(logger.name, "src")
        self.assertEqual(logger.level, logging.INFO)
        again = self.console_manager.setup_logging(level=logging.DEBUG)
        self.assertIs(again, logger)
        self.assertEqual(logger.level, logging.DEBUG)


if __name__ == "__main__":
    unittest.main()
