"""
Tests for group and Lie centralizers, regularity and the matrix-level suites.
"""

import pytest

from src.matrings import (
    GroupElement,
    LieElement,
    all_matrices,
    center_character_check,
    center_character_suite,
    centralizer_bruteforce,
    centralizer_linear,
    centralizer_points,
    chevalley_regular,
    commutes_with,
    det,
    is_regular_typeA,
    jordan_decomposition,
    jordan_suite,
    lie_centralizer,
    make_ring,
    nilpotent_translate_check,
    noncommuting_pair,
    pgl2_char2_suite,
)
from src.utilities.exceptions import BudgetExceededError, FlavorError, InputError


def _u(spec, flavor="SL"):
    R = make_ring(spec)
    return GroupElement.parse(R, "1,1;0,1", flavor)


class TestCentralizerPoints:

    def test_sl2_f2(self):
        Z = centralizer_points(_u("F(2)"))
        assert Z.count == 2
        assert Z.literals() == ["1,0;0,1", "1,1;0,1"]

    @pytest.mark.parametrize("flavor", ["GL", "SL"])
    def test_f3_unipotent(self, flavor):
        Z = centralizer_points(_u("F(3)", flavor))
        assert Z.count == 6
        assert noncommuting_pair(Z) is None

    @pytest.mark.parametrize("spec,flavor", [
        ("F(3)", "SL"), ("F(3)", "PGL"), ("F(2)[e]/e^2", "GL"), ("F(2)[e]/e^2", "PGL"), ("F(2)xF(2)", "SL"),
    ])
    def test_methods_agree(self, spec, flavor):
        g = _u(spec, flavor)
        brute = centralizer_bruteforce(g, workers=2)
        linear = centralizer_linear(g)
        assert brute.same_points(linear)
        assert brute.method == "bruteforce" and linear.method == "linear"

    def test_pgl2_dual_numbers_not_commutative(self):
        Z = centralizer_points(_u("F(2)[e]/e^2", "PGL"))
        pair = noncommuting_pair(Z)
        assert pair is not None
        R = Z.ring
        h1, h2 = pair
        g1, g2 = GroupElement(R, h1, "PGL"), GroupElement(R, h2, "PGL")
        assert g1 * g2 != g2 * g1

    def test_auto_falls_back_to_linear(self):
        Z = centralizer_points(_u("F(3)"), budget=50)
        assert Z.method == "linear"
        assert Z.count == 6

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            centralizer_bruteforce(_u("F(3)"), budget=50)

    def test_unknown_method(self):
        with pytest.raises(InputError):
            centralizer_points(_u("F(3)"), method="magic")

    def test_lie_target_needs_flavor(self):
        X = LieElement.parse(make_ring("F(3)"), "0,1;0,0")
        with pytest.raises(FlavorError):
            centralizer_points(X)
        assert centralizer_points(X, "SL").count == 6


class TestLieCentralizer:

    def test_group_element(self):
        u = _u("F(3)")
        assert lie_centralizer(u, "gl").dimension == 2
        assert lie_centralizer(u, "sl").dimension == 1

    def test_sl_in_characteristic_two(self):
        # scalars are trace zero in sl_2 over F_2
        assert lie_centralizer(_u("F(2)"), "sl").dimension == 2

    def test_nilpotent(self):
        X = LieElement.parse(make_ring("F(3)"), "0,1;0,0", "gl")
        tangent = lie_centralizer(X)
        assert tangent.flavor == "gl"
        assert tangent.dimension_fp == 2

    def test_non_field_has_no_dimension(self):
        tangent = lie_centralizer(_u("F(2)[e]/e^2"), "gl")
        assert tangent.dimension is None
        assert tangent.dimension_fp == 4

    def test_same_space(self):
        u = _u("F(3)")
        assert lie_centralizer(u, "gl").same_space(lie_centralizer(u.power(2), "gl"))

    @pytest.mark.parametrize("spec,expected", [("F(3)", 1), ("F(2)", 2)])
    def test_pgl_basis_excludes_scalars(self, spec, expected):
        tangent = lie_centralizer(_u(spec, "PGL"), "pgl")
        R = tangent.ring
        assert tangent.dimension_fp == expected
        assert len(tangent.basis) == expected
        for Y in tangent.basis:
            off_diagonal = Y[0, 1] != R.zero or Y[1, 0] != R.zero
            assert off_diagonal or Y[0, 0] != Y[1, 1]

    def test_pgl_same_space_is_modulo_scalars(self):
        u = _u("F(3)", "PGL")
        assert lie_centralizer(u, "pgl").same_space(lie_centralizer(u.power(2), "pgl"))


class TestRegularity:

    def test_regular_unipotent(self):
        assert is_regular_typeA(_u("F(3)"))
        assert not is_regular_typeA(GroupElement.identity(make_ring("F(3)"), 2))

    def test_regularity_needs_field(self):
        with pytest.raises(InputError):
            is_regular_typeA(_u("F(2)[e]/e^2"))

    def test_chevalley(self):
        R = make_ring("F(5)")
        semisimple = chevalley_regular(LieElement.parse(R, "1,0;0,2", "gl"), samples=50, seed=3)
        assert semisimple.regular
        assert semisimple.rank == 2
        # ad of a nilpotent is nilpotent, so the rank coefficient vanishes
        assert not chevalley_regular(LieElement.parse(R, "0,1;0,0", "gl"), samples=50, seed=3).regular
        assert not chevalley_regular(LieElement.parse(R, "0,0;0,0", "gl"), samples=50, seed=3).regular


class TestSuites:

    @pytest.mark.parametrize("n,p", [(2, 2), (3, 3), (4, 2)])
    def test_translate(self, n, p):
        checks = nilpotent_translate_check(n, p, samples=20, seed=1)
        assert [c.id for c in checks if not c.passed] == []

    def test_translate_small_ring_is_exhaustive(self):
        checks = {c.id: c for c in nilpotent_translate_check(2, 2, samples=5, seed=1)}
        stable = checks["translate.stable.n2.p2"]
        torsor = checks["translate.torsor.n2.p2"]
        assert stable.passed and torsor.passed
        assert stable.witness["exhaustive"]
        assert stable.witness["enumerated_over"] == make_ring("F(2)[a]/a^2").name
        # trace 0 and det 0 over F2[a]/a^2: 2*8 + 2*2 matrices
        assert stable.witness["checked"] == 20
        assert torsor.witness["checked"] == 20
        assert torsor.witness["kernel_points"] == 2

    def test_translate_large_ring_falls_back(self):
        checks = {c.id: c for c in nilpotent_translate_check(3, 3, samples=10, seed=2)}
        stable = checks["translate.stable.n3.p3"]
        assert not stable.witness["exhaustive"]
        assert stable.witness["enumerated_over"] == "F(3)"
        # 3^6 nilpotents over F3, one Jordan block, the samples
        assert stable.witness["checked"] == 729 + 1 + 10
        assert checks["translate.torsor.n3.p3"].witness["checked"] == stable.witness["checked"]

    def test_translate_requires_divisibility(self):
        with pytest.raises(InputError):
            nilpotent_translate_check(3, 2)

    def test_center_characters(self):
        assert all(c.passed for c in center_character_suite(3, 2))
        check = center_character_check(1, 2, 1)
        assert check.passed
        assert check.witness["dimension"] == 2

    def test_pgl2_suite(self):
        checks = pgl2_char2_suite(qs=(2, 4), dual_qs=(2,))
        assert [c.id for c in checks if not c.passed] == []

    def test_jordan_suite(self):
        checks = jordan_suite(specs=("F(3)",), centralizer_specs=("F(3)",), workers=2)
        assert [c.id for c in checks] == ["jordan.parts.F(3)", "jordan.centralizer.F(3)"]
        assert all(c.passed for c in checks)
        assert checks[1].witness["elements"] == 24


class TestJordanCentralizer:

    def test_centralizer_of_g_is_centralizer_of_u_in_that_of_t(self):
        R = make_ring("F(3)")
        M = all_matrices(R, 2)
        for m in M[det(R, M) == R.one]:
            g = GroupElement(R, m, "SL")
            t, u = jordan_decomposition(g)
            Zg = centralizer_points(g)
            Zt = centralizer_points(t)
            inside = Zt.points[commutes_with(R, Zt.points, u.matrix, "SL")]
            assert Zg.count == len(inside)
            assert Zg.keys() == {h.tobytes() for h in inside}

    def test_semisimple_centralizer_is_larger(self):
        R = make_ring("F(3)")
        g = GroupElement.parse(R, "2,1;0,2")
        t, u = jordan_decomposition(g)
        assert t == GroupElement.parse(R, "2,0;0,2")
        # t is central, so Z(t) is all of SL2(F3)
        assert centralizer_points(t).count == 24
        assert centralizer_points(g).count == centralizer_points(u).count == 6
