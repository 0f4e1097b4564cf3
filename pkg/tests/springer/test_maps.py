"""
Tests for split type-A Springer maps and their inverses.
"""

import numpy as np
import pytest

from src.matrings import GroupElement, enumerate_unipotents, make_ring
from src.springer import (
    SpringerCoefficients,
    apply_springer,
    inverse_coefficients,
    inverse_springer_batch,
    parse_coefficients,
    solve_split,
    springer_batch,
)
from src.utilities.exceptions import CoefficientError, InputError, NotUnipotentError


class TestCoefficients:

    def test_parse(self):
        R = make_ring("F(3)")
        assert parse_coefficients(R, 2, "1;2").coeffs == (1, 2)
        assert parse_coefficients(R, 3, "2").coeffs == (2, 0, 0)
        assert parse_coefficients(R, 2, None).coeffs == (1, 0)

    def test_parse_too_many(self):
        with pytest.raises(CoefficientError):
            parse_coefficients(make_ring("F(3)"), 2, "1;1;1")

    def test_wrong_length(self):
        with pytest.raises(CoefficientError):
            SpringerCoefficients(2, make_ring("F(3)"), (1,))

    def test_n_must_be_positive(self):
        with pytest.raises(InputError):
            SpringerCoefficients(0, make_ring("F(3)"), ())

    def test_validity(self):
        R = make_ring("F(2)[e]/e^2")
        assert SpringerCoefficients(1, R, (R.parse_element("1+e"),)).valid
        assert not SpringerCoefficients(1, R, (R.symbols["e"],)).valid

    def test_describe(self):
        info = solve_split(2, make_ring("F(3)"), 2).describe()
        assert info == {"n": 2, "ring": "F(3)", "coefficients": ["2", "0"], "valid": True}


class TestSolveSplit:

    def test_rest(self):
        assert solve_split(3, make_ring("F(3)"), 2, [1]).coeffs == (2, 1, 0)

    def test_non_unit(self):
        with pytest.raises(CoefficientError):
            solve_split(2, make_ring("F(2)"), 0)

    def test_too_many(self):
        with pytest.raises(CoefficientError):
            solve_split(2, make_ring("F(3)"), 1, [1, 1])


class TestApply:

    def test_sl2(self):
        R = make_ring("F(3)")
        X = apply_springer(solve_split(1, R, 2), GroupElement.parse(R, "1,1;0,1"))
        assert X.to_literal() == "0,2;0,0"
        assert X.flavor == "sl"

    def test_jordan_block_sl3(self):
        R = make_ring("F(5)")
        coeffs = SpringerCoefficients(2, R, (1, 3))
        X = apply_springer(coeffs, GroupElement.parse(R, "1,1,0;0,1,1;0,0,1"))
        assert X.to_literal() == "0,1,3;0,0,1;0,0,0"

    def test_not_unipotent(self):
        R = make_ring("F(3)")
        with pytest.raises(NotUnipotentError):
            apply_springer(solve_split(1, R), GroupElement.parse(R, "2,0;0,2"))

    def test_ring_mismatch(self):
        with pytest.raises(InputError):
            apply_springer(solve_split(1, make_ring("F(3)")), GroupElement.parse(make_ring("F(5)"), "1,1;0,1"))

    def test_size_mismatch(self):
        R = make_ring("F(3)")
        with pytest.raises(InputError):
            apply_springer(solve_split(2, R), GroupElement.parse(R, "1,1;0,1"))


class TestInverse:

    def test_compositional_inverse(self):
        # a(X) = X + X^2 has inverse X - X^2 mod X^3
        R = make_ring("F(3)")
        assert inverse_coefficients(SpringerCoefficients(2, R, (1, 1))) == (1, 2)

    def test_scaled(self):
        R = make_ring("F(5)")
        assert inverse_coefficients(SpringerCoefficients(1, R, (2,))) == (3,)

    def test_requires_unit(self):
        with pytest.raises(CoefficientError):
            inverse_coefficients(SpringerCoefficients(2, make_ring("F(3)"), (0, 1)))

    @pytest.mark.parametrize("spec,n,coeffs", [("F(2)", 2, (1, 1)), ("F(3)", 2, (2, 1)), ("F(2)", 3, (1, 0, 1))])
    def test_round_trip_on_all_unipotents(self, spec, n, coeffs):
        R = make_ring(spec)
        rho = SpringerCoefficients(n, R, coeffs)
        U = enumerate_unipotents(R, n + 1)
        assert np.array_equal(inverse_springer_batch(rho, springer_batch(rho, U)), U)
