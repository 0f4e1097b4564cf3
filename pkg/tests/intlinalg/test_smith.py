"""
Tests for Smith normal form and lattice quotients.
"""

import numpy as np
import pytest
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors
from sympy.polys.domains import ZZ

from src.intlinalg import (
    IntegerMatrix,
    quotient_invariants,
    quotient_torsion,
    smith_normal_form,
    solve_integral,
    torsion_primes_of,
)
from src.primes import TABLE1_TYPES, closed_subsystems
from src.rootdata import root_system
from src.utilities.exceptions import InputError, NonIntegralError

D4_CARTAN = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]


class TestSmithNormalForm:

    def test_a2_cartan(self):
        result = smith_normal_form(IntegerMatrix.from_rows([[2, -1], [-1, 2]]))
        assert result.invariant_factors == (1, 3)
        assert result.torsion == (3,)
        assert result.rank == 2

    def test_d4_cartan(self):
        M = IntegerMatrix.from_rows(D4_CARTAN)
        result = smith_normal_form(M)
        assert result.invariant_factors == (1, 1, 2, 2)
        assert result.check(M)

    def test_rank_deficient(self):
        M = IntegerMatrix.from_rows([[2, 4], [3, 6]])
        result = smith_normal_form(M)
        assert result.rank == 1
        assert result.invariant_factors == (1,)
        assert result.check(M)

    def test_divisibility_chain(self):
        M = IntegerMatrix.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 4]])
        result = smith_normal_form(M)
        factors = result.invariant_factors
        assert factors == (1, 2, 12)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert result.check(M)

    def test_rectangular(self):
        M = IntegerMatrix.from_rows([[6, 4, 2], [4, 6, 8]])
        result = smith_normal_form(M)
        assert result.invariant_factors == (2, 10)
        assert result.check(M)

    def test_torsion_primes_of(self):
        assert torsion_primes_of((1, 2, 12)) == [2, 3]
        assert torsion_primes_of((1, 1)) == []


class TestIntegerMatrix:

    def test_ragged_rows_rejected(self):
        with pytest.raises(InputError):
            IntegerMatrix.from_rows([[1, 2], [3]])

    def test_matmul_and_transpose(self):
        A = IntegerMatrix.from_rows([[1, 2], [3, 4]])
        assert (A @ IntegerMatrix.identity(2)) == A
        assert A.transpose().rows == ((1, 3), (2, 4))


class TestLattice:

    def test_solve_integral(self):
        basis = IntegerMatrix.from_columns([[1, 1], [0, 1]])
        coords = solve_integral(basis, IntegerMatrix.from_columns([[2, 3]]))
        assert coords.columns == [(2, 1)]

    def test_non_integral(self):
        basis = IntegerMatrix.from_columns([[2, 0], [0, 2]])
        with pytest.raises(NonIntegralError):
            solve_integral(basis, IntegerMatrix.from_columns([[1, 0]]))

    def test_root_lattice_in_weight_lattice(self):
        # columns of the A2 Cartan matrix are the simple roots in weight coordinates
        weights = IntegerMatrix.identity(2)
        roots = IntegerMatrix.from_rows([[2, -1], [-1, 2]])
        assert quotient_torsion(weights, roots) == [3]

    def test_free_part(self):
        torsion, free_rank = quotient_invariants(IntegerMatrix.identity(2), IntegerMatrix.from_columns([[2, 0]]))
        assert torsion == (2,)
        assert free_rank == 1


class TestShuffleInvariance:

    @pytest.mark.parametrize("label", TABLE1_TYPES)
    def test_cartan_shuffles(self, label):
        cartan = np.array(root_system(label).cartan, dtype=np.int64)
        expected = smith_normal_form(IntegerMatrix.from_rows(cartan.tolist())).invariant_factors
        rng = np.random.default_rng(sum(map(ord, label)))
        for _ in range(5):
            rows = rng.permutation(len(cartan))
            cols = rng.permutation(len(cartan))
            signs = rng.choice([-1, 1], size=len(cartan))
            shuffled = IntegerMatrix.from_rows((cartan[rows][:, cols] * signs[:, None]).tolist())
            result = smith_normal_form(shuffled)
            assert result.invariant_factors == expected
            assert result.check(shuffled)

    @pytest.mark.parametrize("label", ["A3", "B3", "D4", "E6", "G2"])
    def test_agrees_with_sympy(self, label):
        cartan = [list(row) for row in root_system(label).cartan]
        ours = smith_normal_form(IntegerMatrix.from_rows(cartan)).invariant_factors
        theirs = tuple(abs(int(d)) for d in sympy_invariant_factors(Matrix(cartan), domain=ZZ))
        assert ours == theirs


def _weight_columns(rs, roots):
    """Roots in fundamental-weight coordinates, one column each."""
    return IntegerMatrix.from_columns([[rs.pairing(i, beta) for i in range(rs.rank)] for beta in roots])


class TestLatticeChain:

    @pytest.mark.parametrize("label", ["D4", "E6", "B3", "G2"])
    def test_torsion_primes_of_a_chain(self, label):
        rs = root_system(label)
        weights = IntegerMatrix.identity(rs.rank)
        simple = [rs.simple_root(i) for i in range(rs.rank)]
        roots = _weight_columns(rs, simple)
        upper = set(torsion_primes_of(tuple(quotient_torsion(weights, roots))))
        for sub in closed_subsystems(rs):
            if sub.rank == 0:
                continue
            generators = _weight_columns(rs, sub.base)
            whole = set(torsion_primes_of(tuple(quotient_torsion(weights, generators))))
            lower = set(torsion_primes_of(tuple(quotient_torsion(roots, generators))))
            assert whole <= upper | lower, sub.label

    def test_orders_multiply_at_full_rank(self):
        rs = root_system("E6")
        weights = IntegerMatrix.identity(rs.rank)
        roots = _weight_columns(rs, [rs.simple_root(i) for i in range(rs.rank)])
        assert quotient_torsion(weights, roots) == [3]
        full = [sub for sub in closed_subsystems(rs) if sub.rank == rs.rank and sub.label != "E6"]
        assert any(sub.label == "A2xA2xA2" for sub in full)
        for sub in full:
            generators = _weight_columns(rs, sub.base)
            whole = np.prod(quotient_torsion(weights, generators), dtype=np.int64)
            lower = np.prod(quotient_torsion(roots, generators), dtype=np.int64)
            assert whole == 3 * lower, sub.label
