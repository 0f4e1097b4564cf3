"""
Tests for closed-subsystem enumeration and alcove vertices.
"""

import pytest

from src.primes import (
    alcove_vertex_subsystems,
    closed_subsystems,
    closed_subsystems_bruteforce,
    is_closed,
    subsystem_from_base,
)
from src.primes.classify import subsystem_torsion
from src.rootdata import root_system
from src.utilities.exceptions import BudgetExceededError, InputError


class TestClosedSubsystems:

    def test_a1(self):
        subs = closed_subsystems_bruteforce(root_system("A1"))
        assert sorted(s.label for s in subs) == ["A1", "empty"]

    def test_a2_counts(self):
        rs = root_system("A2")
        # the oracle also sees the conjugate A1 spanned by the highest root
        assert len(closed_subsystems_bruteforce(rs)) == 5
        extended = closed_subsystems(rs, "extended")
        assert len(extended) == 4
        assert extended[0].label == "A2"
        assert extended[-1].label == "empty"

    def test_b2_contains_long_root_subsystem(self):
        labels = {s.label for s in closed_subsystems(root_system("B2"))}
        assert "A1xA1" in labels

    def test_g2_contains_a2(self):
        labels = {s.label for s in closed_subsystems(root_system("G2"), "extended")}
        assert {"G2", "A2", "A1xA1", "empty"} <= labels

    @pytest.mark.parametrize("label", ["B3", "C3", "D4"])
    def test_all_closed(self, label):
        rs = root_system(label)
        assert all(is_closed(rs, s) for s in closed_subsystems(rs, "extended"))

    def test_oracle_budget(self):
        with pytest.raises(BudgetExceededError):
            closed_subsystems_bruteforce(root_system("E8"))
        with pytest.raises(BudgetExceededError):
            closed_subsystems_bruteforce(root_system("A3"), max_positive_roots=3)

    def test_unknown_method(self):
        with pytest.raises(InputError):
            closed_subsystems(root_system("A2"), "guess")

    def test_from_base(self):
        rs = root_system("A3")
        sub = subsystem_from_base(rs, [rs.simple_root(0), rs.simple_root(2)])
        assert sub.label == "A1xA1"
        assert sub.size == 4
        assert sub.rank == 2

    def test_torsion_of_full_system(self):
        rs = root_system("C3")
        full = closed_subsystems(rs, "extended")[0]
        assert subsystem_torsion(rs, full) == ([], [])


class TestAlcove:

    def test_g2_vertices(self):
        vertices = alcove_vertex_subsystems(root_system("G2"))
        assert [(v.n, v.subsystem, v.root_quotient) for v in vertices] == [
            (3, "A2", [3]),
            (2, "A1xA1", [2]),
        ]
        assert all(v.passed for v in vertices)

    def test_type_a_vertices_are_trivial(self):
        for vertex in alcove_vertex_subsystems(root_system("A3")):
            assert vertex.n == 1
            assert vertex.subsystem == "A3"
            assert vertex.root_quotient == []
            assert vertex.passed

    @pytest.mark.parametrize("label", ["B4", "F4", "E6"])
    def test_all_vertices_pass(self, label):
        assert all(v.passed for v in alcove_vertex_subsystems(root_system(label)))
