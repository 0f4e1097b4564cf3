"""
Tests for the prime-classification check suites.
"""

from src.primes import alcove_suite, subsystems_suite, table1_suite


def _failed(checks):
    return [c.id for c in checks if not c.passed]


class TestSuites:

    def test_table1(self):
        checks = table1_suite(("A2", "B3", "G2"))
        assert _failed(checks) == []
        ids = {c.id for c in checks}
        assert "table1.G2" in ids
        assert "table1.exists.A2.adj.p3" in ids

    def test_subsystems_runs_oracle_on_small_types(self):
        checks = subsystems_suite(("A2", "B3", "E6"))
        assert _failed(checks) == []
        ids = {c.id for c in checks}
        assert "subsystems.oracle.B3" in ids
        assert "subsystems.oracle.E6" not in ids

    def test_alcove(self):
        checks = alcove_suite(("C3", "G2"))
        assert len(checks) == 5
        assert _failed(checks) == []
