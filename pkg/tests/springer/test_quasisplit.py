"""
Tests for quasi-split type-A coefficients.
"""

import numpy as np
import pytest

from src.matrings import enumerate_unipotents, make_ring
from src.springer import (
    DescentObstruction,
    SpringerCoefficients,
    anti_diagonal_w,
    psi_batch,
    recurrence_holds,
    solve_quasisplit_typeA,
)
from src.utilities.exceptions import CoefficientError


class TestAntiDiagonal:

    def test_signs(self):
        w = anti_diagonal_w(make_ring("F(3)"), 3)
        assert w.tolist() == [[0, 0, 1], [0, 2, 0], [1, 0, 0]]

    def test_psi_is_an_involution_on_sl3(self):
        R = make_ring("F(3)")
        w = anti_diagonal_w(R, 3)
        U = enumerate_unipotents(R, 3)
        assert np.array_equal(psi_batch(R, w, psi_batch(R, w, U)), U)


class TestSolve:

    @pytest.mark.parametrize("n,base,extension", [
        (1, "F(3)", "F(3,2)"),
        (2, "F(3)", "F(3,2)"),
        (3, "F(2)", "F(2,2)"),
        (3, "F(5)", "F(5,2)"),
        (2, "F(2,2)", "F(2,4)"),
    ])
    def test_recurrence_holds(self, n, base, extension):
        solved = solve_quasisplit_typeA(n, make_ring(base), make_ring(extension))
        assert isinstance(solved, SpringerCoefficients)
        assert solved.valid
        assert all(recurrence_holds(solved, solved.descent.table))

    def test_involution_name(self):
        solved = solve_quasisplit_typeA(2, make_ring("F(2,2)"), make_ring("F(2,4)"))
        assert solved.descent.involution == "frob^2"
        assert solved.describe()["involution"] == "frob^2"

    def test_trivial_involution_in_characteristic_two(self):
        F2 = make_ring("F(2)")
        obstruction = solve_quasisplit_typeA(2, F2, F2)
        assert isinstance(obstruction, DescentObstruction)
        assert obstruction.step == 2
        assert obstruction.involution == "id"

    def test_trivial_involution_rank_one(self):
        F2 = make_ring("F(2)")
        assert isinstance(solve_quasisplit_typeA(1, F2, F2), SpringerCoefficients)

    def test_trivial_involution_odd_characteristic(self):
        F3 = make_ring("F(3)")
        solved = solve_quasisplit_typeA(2, F3, F3)
        assert solved.coeffs == (1, 1)

    def test_not_quadratic(self):
        with pytest.raises(CoefficientError):
            solve_quasisplit_typeA(2, make_ring("F(3)"), make_ring("F(3,3)"))

    def test_mixed_characteristic(self):
        with pytest.raises(CoefficientError):
            solve_quasisplit_typeA(2, make_ring("F(2)"), make_ring("F(3,2)"))

    def test_a1_must_be_fixed(self):
        R = make_ring("F(3,2)")
        with pytest.raises(CoefficientError):
            solve_quasisplit_typeA(2, make_ring("F(3)"), R, R.symbols["x"])

    def test_broken_recurrence_is_detected(self):
        solved = solve_quasisplit_typeA(2, make_ring("F(3)"), make_ring("F(3,2)"))
        broken = solved.with_coeffs((solved.coeffs[0], int(solved.ring.add(solved.coeffs[1], 1))))
        assert recurrence_holds(broken, solved.descent.table) == [True, False]
