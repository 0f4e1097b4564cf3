"""
Tests for cocharacter filtrations and the congruences of Springer maps.
"""

import numpy as np
import pytest

from src.matrings import make_ring
from src.reporting import CheckRecorder
from src.springer import KawanakaContext, SpringerCoefficients, differential_check, kawanaka_check, kawanaka_suite
from src.utilities.exceptions import InputError


class TestKawanakaContext:

    def test_levels(self):
        context = KawanakaContext((1, 0, -1))
        assert context.max_weight == 2
        assert context.positions(1) == [(0, 1), (0, 2), (1, 2)]
        assert context.positions(2) == [(0, 2)]
        assert context.positions(3) == []

    def test_level_zero_is_level_one(self):
        context = KawanakaContext((1, 0, -1))
        assert context.positions(0) == context.positions(1)

    def test_subgroup(self):
        R = make_ring("F(2)")
        context = KawanakaContext((1, 0, -1))
        assert len(context.subgroup(R, 1)) == 8
        assert len(context.subgroup(R, 2)) == 2

    def test_in_level(self):
        context = KawanakaContext((1, 0, -1))
        X = np.zeros((2, 3, 3), dtype=np.int64)
        X[0, 0, 2] = 1
        X[1, 0, 1] = 1
        assert context.in_level(X, 2).tolist() == [True, False]

    @pytest.mark.parametrize("weights", [(-1, 0, 1), (1, 1, 0), (0,)])
    def test_invalid(self, weights):
        with pytest.raises(InputError):
            KawanakaContext(weights)


class TestChecks:

    @pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
    def test_congruences(self, m, n):
        rec = CheckRecorder("kawanaka")
        R = make_ring("F(3)")
        assert kawanaka_check(rec, SpringerCoefficients(2, R, (2, 1)), (1, 0, -1), m, n)
        assert len(rec.checks) == 3

    def test_sl4(self):
        rec = CheckRecorder("kawanaka")
        R = make_ring("F(2)")
        assert kawanaka_check(rec, SpringerCoefficients(3, R, (1, 1, 0)), (1, 1, -1, -1), 1, 1, samples=30, seed=4)

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            kawanaka_check(CheckRecorder("kawanaka"), SpringerCoefficients(1, make_ring("F(3)"), (1,)), (1, 0, -1), 1, 1)

    def test_differential(self):
        rec = CheckRecorder("kawanaka")
        assert differential_check(rec, SpringerCoefficients(2, make_ring("F(3)"), (2, 1)))
        assert rec.checks[0].witness["ring"] == "F(3)[e]/e^2"

    def test_suite(self):
        checks = kawanaka_suite(samples=20, seed=5)
        assert len(checks) == 4 * (3 * 4 + 1)
        assert [c.id for c in checks if not c.passed] == []
