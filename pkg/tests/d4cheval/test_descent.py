"""
Tests for D4 Galois descent of the coefficients a1..a4.
"""

import pytest

from src.d4cheval import d4_descent_solve, descent_skeleton, solve_descent, verify_d4
from src.utilities.exceptions import CoefficientError, InputError


class TestSkeleton:

    def test_split(self):
        case = descent_skeleton("split", 5)
        assert case.algebra == "F(5)"
        assert case.generators == {}

    def test_c2_over_f9(self):
        case = descent_skeleton("c2", 9)
        assert case.algebra == "F(3,4)"
        assert case.generators == {"tau": "frob^2"}
        assert case.images == {"tau": "lambda"}

    def test_s3(self):
        case = descent_skeleton("s3", 3)
        assert case.algebra == "F(3,3)xF(3,3)"
        assert case.images == {"sigma": "mu", "tau": "lambda"}

    @pytest.mark.parametrize("q", [4, 6, 1])
    def test_q_must_be_odd_prime_power(self, q):
        with pytest.raises(CoefficientError):
            descent_skeleton("c2", q)

    def test_unknown_case(self):
        with pytest.raises(InputError):
            descent_skeleton("d5", 3)


class TestSolveSkeleton:

    def test_split_skeleton_keeps_given_coefficients(self):
        solved = d4_descent_solve(descent_skeleton("split", 5), a1="3", a3="4")
        assert solved.valid
        assert solved.coefficients == ["3", "0", "4", "0"]

    def test_skeleton_is_not_mutated(self):
        skeleton = descent_skeleton("c3", 3)
        solved = d4_descent_solve(skeleton)
        assert solved.valid
        assert skeleton.coefficients != solved.coefficients
        assert not skeleton.relations


class TestSolve:

    def test_split_takes_coefficients_as_given(self):
        solved = solve_descent("split", 3, a1="2", a2="1")
        assert solved.valid
        assert solved.coefficients == ["2", "1", "0", "0"]
        assert solved.relations == []

    def test_c2_pairs_a2_with_its_conjugate(self):
        solved = solve_descent("c2", 3, a2="x")
        assert solved.valid
        # x^2 = -1 in F_9, so tau(x) = x^3 = -x
        assert solved.coefficients[1:3] == ["(0,1)", "(0,2)"]
        assert len(solved.relations) == 4
        assert all(r.holds for r in solved.relations)

    @pytest.mark.parametrize("q", [3, 5])
    def test_c3_trace_condition(self, q):
        solved = solve_descent("c3", q)
        assert solved.valid
        assert solved.details["trace"] == solved.details["trace_target"]

    def test_s3(self):
        solved = solve_descent("s3", 3)
        assert solved.valid
        assert solved.details["a3_fixed_by_tau_sigma"]
        assert {r.generator for r in solved.relations} == {"sigma", "tau"}

    def test_a1_must_be_fixed(self):
        with pytest.raises(CoefficientError):
            solve_descent("c2", 3, a1="x")

    def test_a1_must_be_a_unit(self):
        with pytest.raises(CoefficientError):
            solve_descent("c3", 3, a1="0")

    def test_a4_must_be_fixed(self):
        with pytest.raises(CoefficientError):
            solve_descent("c2", 3, a4="x")


class TestSuite:

    def test_all_checks_pass(self):
        checks = verify_d4()
        assert [c.id for c in checks if not c.passed] == []
        ids = {c.id for c in checks}
        assert {"d4.table.complete", "d4.fixed-space.Q", "d4.descent.s3"} <= ids
