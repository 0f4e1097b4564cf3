"""
Tests for the D4 commutator table.
"""

from src.d4cheval import HIGHEST, POSITIVE_ROOTS, RELATIONS, d4_structure_constants, root_label
from src.rootdata import root_system


class TestTable:

    def test_positive_roots(self):
        assert len(POSITIVE_ROOTS) == 12
        assert sorted(POSITIVE_ROOTS) == sorted(root_system("D4").positive_roots)
        assert POSITIVE_ROOTS[-1] == HIGHEST

    def test_relation_count(self):
        table = d4_structure_constants()
        assert len(RELATIONS) == 16
        assert table.relation_count() == 16
        assert table.size == 12

    def test_antisymmetric(self):
        table = d4_structure_constants()
        for (i, j), (k, n) in table.constants.items():
            assert table.constants[(j, i)] == (k, -n)

    def test_constants(self):
        table = d4_structure_constants()
        assert table.constant((1, 0, 0, 0), (0, 1, 0, 0)) == 1
        assert table.constant((0, 1, 0, 0), (1, 0, 0, 0)) == -1
        assert table.constant((0, 1, 0, 1), (1, 1, 1, 0)) == 1
        assert table.constant((1, 0, 0, 0), (0, 0, 1, 0)) == 0
        assert table.constant(HIGHEST, (1, 0, 0, 0)) == 0

    def test_bracket_index(self):
        table = d4_structure_constants()
        i, j = table.index((1, 0, 0, 0)), table.index((0, 1, 0, 0))
        assert table.bracket_index(i, j) == (table.index((1, 1, 0, 0)), 1)
        assert table.bracket_index(i, i) is None

    def test_root_label(self):
        assert root_label(HIGHEST) == "a1+2a2+a3+a4"
        assert root_label((0, 1, 0, 0)) == "a2"
