"""
Tests for the Springer-map checks and suites.
"""

import pytest

from src.matrings import make_ring
from src.reporting import CheckRecorder
from src.springer import (
    SpringerCoefficients,
    commutativity_equivalence_check,
    commutativity_suite,
    corrupt_coefficients,
    field_spec,
    jordan_block,
    obstruction_check,
    psi_demonstration,
    quasisplit_bundle,
    solve_quasisplit_typeA,
    solve_split,
    springer_suite,
    twisted_equivariance_check,
    uniqueness_check,
    verify_springer,
)
from src.utilities.exceptions import CoefficientError, InputError


def _failed(checks):
    return [c.id for c in checks if not c.passed]


class TestHelpers:

    @pytest.mark.parametrize("q,spec", [(2, "F(2)"), (9, "F(3,2)"), (8, "F(2,3)")])
    def test_field_spec(self, q, spec):
        assert field_spec(q) == spec

    @pytest.mark.parametrize("q", [1, 6, 12])
    def test_field_spec_rejects(self, q):
        with pytest.raises(InputError):
            field_spec(q)

    def test_jordan_block(self):
        assert jordan_block(make_ring("F(2)"), 3).tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]

    def test_corrupt_needs_higher_index(self):
        coeffs = solve_split(2, make_ring("F(3)"))
        with pytest.raises(CoefficientError):
            corrupt_coefficients(coeffs, 0)
        assert corrupt_coefficients(coeffs, 1).coeffs == (1, 1)


class TestVerifySpringer:

    @pytest.mark.parametrize("spec,n", [("F(2)", 2), ("F(3)", 1), ("F(2)[e]/e^2", 1)])
    def test_split_passes(self, spec, n):
        checks = verify_springer(solve_split(n, make_ring(spec)), samples=20, seed=1)
        assert _failed(checks) == []
        assert f"springer.bijection.n{n}.{make_ring(spec).name}" in {c.id for c in checks}

    def test_non_unit_stops_after_bijection(self):
        R = make_ring("F(2)")
        checks = verify_springer(SpringerCoefficients(2, R, (0, 1)), samples=10, seed=1)
        assert [c.passed for c in checks] == [False, True]
        assert checks[1].witness["mode"] == "exhaustive"

    def test_quasisplit_coefficients(self):
        solved = solve_quasisplit_typeA(2, make_ring("F(3)"), make_ring("F(3,2)"))
        checks = verify_springer(solved, samples=10, seed=1, tag="qs")
        assert _failed(checks) == []
        assert {"springer.recurrence.qs", "springer.twisted.qs", "springer.negative-control.qs"} <= {c.id for c in checks}

    def test_uniqueness(self):
        rec = CheckRecorder("springer")
        assert uniqueness_check(rec, SpringerCoefficients(3, make_ring("F(5)"), (2, 4, 1)), "t")

    def test_twisted_needs_descent(self):
        with pytest.raises(InputError):
            twisted_equivariance_check(CheckRecorder("springer"), solve_split(1, make_ring("F(3)")), "t")


class TestBundles:

    @pytest.mark.parametrize("n,q", [(1, 3), (2, 2), (3, 3)])
    def test_quasisplit_bundle(self, n, q):
        assert _failed(quasisplit_bundle(n, q, samples=10, seed=2)) == []

    def test_obstruction(self):
        rec = CheckRecorder("springer")
        assert obstruction_check(rec)
        assert "no a_2" in rec.checks[0].witness["reason"]

    def test_psi_demonstration(self):
        rec = CheckRecorder("springer")
        assert psi_demonstration(rec)
        assert rec.checks[0].witness == {"SL2": True, "SL3": False}

    @pytest.mark.parametrize("group,q", [("SL2", 3), ("PGL2", 2), ("PGL2", 3)])
    def test_commutativity(self, group, q):
        rec = CheckRecorder("commutativity")
        assert commutativity_equivalence_check(rec, group, q)

    def test_commutativity_pgl2_char2_is_not_commutative(self):
        rec = CheckRecorder("commutativity")
        commutativity_equivalence_check(rec, "PGL2", 2)
        assert rec.checks[0].witness["commutative"] is False

    def test_commutativity_unknown_group(self):
        with pytest.raises(InputError):
            commutativity_equivalence_check(CheckRecorder("commutativity"), "GL2", 3)

    def test_springer_suite_small_grid(self):
        checks = springer_suite(samples=10, seed=3, grid=((1, 2), (2, 3)))
        assert _failed(checks) == []
        assert "springer.split-rejects-nonunit" in {c.id for c in checks}

    def test_commutativity_suite(self):
        assert _failed(commutativity_suite()) == []
