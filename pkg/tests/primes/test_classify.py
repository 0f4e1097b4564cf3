"""
Tests for bad, torsion and singular primes and the reference table.
"""

import pytest

from src.primes import (
    RootDatum,
    bad_primes,
    bad_primes_by_coefficients,
    classification_table,
    expected_table1,
    singular_primes,
    table1_rows,
    torsion_primes,
    torsion_primes_by_coefficients,
)
from src.rootdata import root_system


class TestPrimes:

    @pytest.mark.parametrize("label", ["A2", "B3", "C3", "D4", "G2", "F4"])
    def test_against_reference(self, label):
        rs = root_system(label)
        expected = expected_table1(label)
        assert bad_primes(rs) == expected["bad"]
        assert torsion_primes(rs) == expected["torsion"]
        assert singular_primes(rs) == expected["singular"]

    @pytest.mark.parametrize("label", ["B2", "E6", "E8"])
    def test_subsystems_agree_with_coefficients(self, label):
        rs = root_system(label)
        assert bad_primes(rs) == bad_primes_by_coefficients(rs)
        assert torsion_primes(rs) == torsion_primes_by_coefficients(rs)

    def test_type_a_has_no_bad_primes(self):
        rs = root_system("A5")
        assert bad_primes(rs) == []
        assert torsion_primes(rs) == []
        assert singular_primes(rs) == [2, 3]

    def test_g2_torsion_is_smaller_than_bad(self):
        rs = root_system("G2")
        assert torsion_primes(rs) == [2]
        assert bad_primes(rs) == [2, 3]

    def test_methods_agree(self):
        rs = root_system("B3")
        assert bad_primes(rs, "extended") == bad_primes(rs, "bruteforce")
        assert torsion_primes(rs, "extended") == torsion_primes(rs, "bruteforce")


class TestClassificationTable:

    def test_simply_connected_e6(self):
        report = classification_table(root_system("E6"))
        assert report.isogeny == "sc"
        assert report.bad == [2, 3]
        assert report.singular == [3]
        assert report.good == {"2": False, "3": False, "5": True, "7": True}
        assert report.very_good["5"]
        assert report.fundamental_group_invariants == []
        assert report.center_invariants == [3]
        assert report.highest_root == [1, 2, 2, 3, 2, 1]
        assert report.coefficient_check
        assert report.torsion_in_bad

    def test_adjoint_datum(self):
        rs = root_system("A2")
        report = classification_table(rs, RootDatum.adjoint(rs), primes=(2, 3))
        assert report.isogeny == "adj"
        assert report.fundamental_group_invariants == [3]
        assert report.center_invariants == []
        assert report.good == {"2": True, "3": True}
        assert report.very_good == {"2": True, "3": False}

    def test_torus_rank_is_reported(self):
        rs = root_system("A1")
        report = classification_table(rs, RootDatum.simply_connected(rs, torus_rank=2))
        assert report.torus_rank == 2


class TestTable1:

    def test_rows_match(self):
        rows = table1_rows(("A1", "B2", "C3", "D4", "G2"))
        assert [row.root_type for row in rows] == ["A1", "B2", "C3", "D4", "G2"]
        assert all(row.matches and row.coefficient_check and row.torsion_in_bad for row in rows)

    @pytest.mark.parametrize("label,expected", [
        ("A3", {"bad": [], "torsion": [], "singular": [2]}),
        ("B2", {"bad": [2], "torsion": [], "singular": [2]}),
        ("B4", {"bad": [2], "torsion": [2], "singular": [2]}),
        ("E8", {"bad": [2, 3, 5], "torsion": [2, 3, 5], "singular": []}),
    ])
    def test_expected(self, label, expected):
        assert expected_table1(label) == expected
