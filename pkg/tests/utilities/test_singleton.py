"""
Tests for the Singleton metaclass.
"""

import unittest
from concurrent.futures import ThreadPoolExecutor

from src.utilities.singleton import Singleton


class _Counter(metaclass=Singleton):
    built = 0

    def __init__(self):
        type(self).built += 1


class TestSingleton(unittest.TestCase):
    """Test cases for the Singleton metaclass."""

    def setUp(self):
        Singleton.clear_instance(_Counter)
        _Counter.built = 0

    def tearDown(self):
        Singleton.clear_instance(_Counter)

    def test_same_instance(self):
        self.assertIs(_Counter(), _Counter())
        self.assertEqual(_Counter.built, 1)

    def test_clear_instance(self):
        first = _Counter()
        Singleton.clear_instance(_Counter)
        self.assertFalse(Singleton.has_instance(_Counter))
        self.assertIsNot(_Counter(), first)
        self.assertEqual(_Counter.built, 2)

    def test_clear_missing_is_noop(self):
        Singleton.clear_instance(_Counter)
        Singleton.clear_instance(_Counter)
        self.assertFalse(Singleton.has_instance(_Counter))

    def test_clear_all(self):
        _Counter()
        Singleton.clear_all()
        self.assertFalse(Singleton.has_instance(_Counter))

    def test_threads_share_one_instance(self):
        with ThreadPoolExecutor(max_workers=8) as pool:
            instances = list(pool.map(lambda _: _Counter(), range(32)))
        self.assertTrue(all(i is instances[0] for i in instances))
        self.assertEqual(_Counter.built, 1)


if __name__ == "__main__":
    unittest.main()
