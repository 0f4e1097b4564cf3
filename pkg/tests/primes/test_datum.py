"""
Tests for root data and the existence decision.
"""

import pytest

from src.primes import (
    RootDatum,
    center_invariants,
    fundamental_group_invariants,
    fundamental_group_order,
    springer_exists,
)
from src.rootdata import root_system
from src.utilities.exceptions import InputError


class TestRootDatum:

    @pytest.mark.parametrize("label,sc_center,adj_pi1", [
        ("A2", [3], [3]),
        ("A3", [4], [4]),
        ("D4", [2, 2], [2, 2]),
        ("E8", [], []),
    ])
    def test_extreme_isogenies(self, label, sc_center, adj_pi1):
        rs = root_system(label)
        sc, adj = RootDatum.simply_connected(rs), RootDatum.adjoint(rs)
        assert fundamental_group_invariants(sc) == []
        assert center_invariants(sc) == sc_center
        assert fundamental_group_invariants(adj) == adj_pi1
        assert center_invariants(adj) == []

    def test_intermediate_a3(self):
        rd = RootDatum.from_descriptor(root_system("A3"), "0,1,0")
        assert fundamental_group_invariants(rd) == [2]
        assert center_invariants(rd) == [2]
        assert fundamental_group_order(rd) == 2

    def test_redundant_generator_is_adjoint(self):
        rd = RootDatum.from_descriptor(root_system("A3"), "1,0,1")
        assert fundamental_group_order(rd) == 4

    def test_descriptor_aliases(self):
        rs = root_system("B3")
        assert RootDatum.from_descriptor(rs, "simply-connected").isogeny == "sc"
        assert RootDatum.from_descriptor(rs, " Adjoint ").isogeny == "adj"

    def test_several_generators(self):
        rd = RootDatum.from_descriptor(root_system("D4"), "1,0,0,0;2,0,0,0")
        assert rd.generators == ((1, 0, 0, 0), (2, 0, 0, 0))
        assert fundamental_group_invariants(rd) == [2]

    @pytest.mark.parametrize("descriptor", ["half", "1,0", "1,,0,1"])
    def test_bad_descriptors(self, descriptor):
        with pytest.raises(InputError):
            RootDatum.from_descriptor(root_system("A3"), descriptor)

    def test_negative_torus_rank(self):
        with pytest.raises(InputError):
            RootDatum.simply_connected(root_system("A1"), torus_rank=-1)


class TestSpringerExists:

    def test_simply_connected_good_prime(self):
        decision = springer_exists(RootDatum.simply_connected(root_system("A1")), 2)
        assert decision.exists
        assert decision.reasons == []

    def test_divides_fundamental_group(self):
        decision = springer_exists(RootDatum.adjoint(root_system("A1")), 2)
        assert not decision.exists
        assert decision.fundamental_group_order == 2
        assert decision.reasons == ["2 divides |pi_1| = 2"]

    def test_bad_prime(self):
        decision = springer_exists(RootDatum.simply_connected(root_system("G2")), 3)
        assert not decision.exists
        assert decision.bad_primes == [2, 3]
        assert decision.reasons == ["3 is a bad prime for G2"]

    def test_both_reasons(self):
        decision = springer_exists(RootDatum.adjoint(root_system("D4")), 2)
        assert len(decision.reasons) == 2

    def test_characteristic_zero(self):
        assert springer_exists(RootDatum.adjoint(root_system("E7")), 0).exists

    def test_torus_plays_no_part(self):
        rs = root_system("C3")
        assert springer_exists(RootDatum.simply_connected(rs, torus_rank=3), 3).exists

    @pytest.mark.parametrize("p", [1, 4, -2])
    def test_not_a_characteristic(self, p):
        with pytest.raises(InputError):
            springer_exists(RootDatum.simply_connected(root_system("A2")), p)
