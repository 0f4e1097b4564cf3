"""
Tests for Weyl group orders, orbits and parabolic indices.
"""

import pytest

from src.rootdata import (
    classical_indices,
    fundamental_weight,
    parabolic_index,
    parabolic_index_table,
    parabolic_indices,
    root_system,
    subdiagram_weyl_order,
    weyl_group_order,
    weyl_group_order_by_orbits,
    weyl_orbit,
    weyl_suite,
)
from src.utilities.exceptions import InputError


class TestWeylOrder:

    @pytest.mark.parametrize("label,order", [
        ("A1", 2), ("A3", 24), ("B3", 48), ("C4", 384), ("D4", 192), ("G2", 12), ("F4", 1152),
        ("E6", 51840), ("E7", 2903040), ("E8", 696729600),
    ])
    def test_order(self, label, order):
        assert weyl_group_order(root_system(label)) == order

    @pytest.mark.parametrize("label", ["A4", "B3", "D5", "G2", "F4"])
    def test_orbit_recursion_agrees(self, label):
        rs = root_system(label)
        assert weyl_group_order_by_orbits(rs.cartan) == weyl_group_order(rs)

    def test_subdiagram(self):
        # D4 minus the branch node is A1 x A1 x A1
        assert subdiagram_weyl_order(root_system("D4"), [0, 2, 3]) == 8
        assert subdiagram_weyl_order(root_system("D4"), []) == 1


class TestOrbits:

    def test_orbit_of_omega1_in_a2(self):
        orbit = weyl_orbit(root_system("A2"), fundamental_weight(root_system("A2"), 1))
        assert orbit == {(1, 0), (-1, 1), (0, -1)}

    def test_orbit_size_is_parabolic_index(self):
        rs = root_system("E6")
        assert len(weyl_orbit(rs, fundamental_weight(rs, 1))) == parabolic_index(rs, 1) == 27

    def test_wrong_length(self):
        with pytest.raises(InputError):
            weyl_orbit(root_system("A2"), (1, 0, 0))

    def test_bad_index(self):
        with pytest.raises(InputError):
            parabolic_index(root_system("A2"), 3)


class TestParabolicIndices:

    def test_e6(self):
        assert parabolic_indices(root_system("E6")) == [27, 72, 216, 720, 216, 27]

    def test_e7(self):
        assert parabolic_indices(root_system("E7")) == [126, 576, 2016, 10080, 4032, 756, 56]

    @pytest.mark.parametrize("family,rank", [("B", 2), ("B", 3), ("B", 5), ("D", 4), ("D", 6)])
    def test_closed_forms(self, family, rank):
        from src.rootdata import build_root_system
        assert parabolic_indices(build_root_system(family, rank)) == classical_indices(family, rank)

    def test_closed_form_values(self):
        assert classical_indices("B", 3) == [6, 12, 8]
        assert classical_indices("D", 4) == [8, 24, 8, 8]
        with pytest.raises(ValueError):
            classical_indices("E", 6)

    def test_table_factors(self):
        rows = parabolic_index_table(root_system("E6"))
        assert rows[3] == {"node": 4, "index": 720, "factors": {2: 4, 3: 2, 5: 1}}


class TestWeylSuite:

    def test_all_checks_pass(self):
        checks = weyl_suite()
        assert checks
        assert [c.id for c in checks if not c.passed] == []
