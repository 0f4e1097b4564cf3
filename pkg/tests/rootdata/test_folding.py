"""
Tests for folding along diagram automorphisms.
"""

import pytest

from src.rootdata import DiagramAutomorphism, fold, folding_suite, named_automorphisms, root_system
from src.rootdata.folding import orbits_of, type_a_fold_root_strings
from src.utilities.exceptions import AutomorphismError


def _fold(label, name):
    rs = root_system(label)
    return fold(rs, named_automorphisms(rs, name))


class TestAutomorphisms:

    def test_order(self):
        rs = root_system("D4")
        assert named_automorphisms(rs, "rot3")[0].order == 3
        assert named_automorphisms(rs, "lambda")[0].order == 2
        assert named_automorphisms(rs, "id")[0].order == 1

    def test_s3_has_two_generators(self):
        assert [a.name for a in named_automorphisms(root_system("D4"), "s3")] == ["lambda", "mu"]

    def test_not_a_symmetry(self):
        with pytest.raises(AutomorphismError):
            DiagramAutomorphism((1, 0, 2, 3)).validate(root_system("D4"))

    def test_not_a_permutation(self):
        with pytest.raises(AutomorphismError):
            DiagramAutomorphism((0, 0, 1)).validate(root_system("A3"))

    @pytest.mark.parametrize("label,name", [("B3", "flip"), ("D5", "rot3"), ("E7", "flip"), ("A3", "spin")])
    def test_unavailable(self, label, name):
        with pytest.raises(AutomorphismError):
            named_automorphisms(root_system(label), name)

    def test_orbits(self):
        autos = named_automorphisms(root_system("E6"), "flip")
        assert orbits_of(autos, 6) == [[0, 5], [1], [2, 4], [3]]


class TestFold:

    def test_a3_gives_c2(self):
        result = _fold("A3", "flip")
        assert "C2" in result.isomorphic_labels
        assert result.orbits == [[1, 3], [2]]
        assert result.kernel_order == 1
        assert result.images_match
        assert result.caveat is None

    def test_a2_has_doubled_orbit(self):
        result = _fold("A2", "flip")
        assert result.folded_type == "A1"
        assert result.folded_cartan == [[2]]
        assert result.doubled_orbits == [[1, 2]]
        assert result.kernel_order == 2
        assert result.images_match
        assert result.caveat is not None

    def test_a4_gives_b2(self):
        result = _fold("A4", "flip")
        assert "B2" in result.isomorphic_labels
        assert result.kernel_order == 2

    def test_a5_gives_c3(self):
        assert _fold("A5", "flip").folded_type == "C3"

    def test_d5_gives_b4(self):
        assert _fold("D5", "flip").folded_type == "B4"

    @pytest.mark.parametrize("name", ["rot3", "s3"])
    def test_d4_triality_gives_g2(self, name):
        result = _fold("D4", name)
        assert result.folded_type == "G2"
        assert result.orbits == [[1, 3, 4], [2]]

    def test_e6_gives_f4(self):
        result = _fold("E6", "flip")
        assert result.folded_type == "F4"
        assert result.images_match

    def test_identity_changes_nothing(self):
        result = _fold("B3", "id")
        assert result.folded_type == "B3"
        assert result.image_roots == result.folded_positive_roots

    def test_root_strings(self):
        matches, images, shapes = type_a_fold_root_strings(2)
        assert matches
        assert len(images) == len(shapes) == 9

    def test_suite_passes(self):
        assert [c.id for c in folding_suite() if not c.passed] == []
