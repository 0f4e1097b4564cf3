"""
Tests for Lie U of D4: brackets, Ad(u), the fixed space and triality.
"""

from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from src.d4cheval import (
    LieUVector,
    ad_bracket,
    ad_matrix,
    ad_u_action,
    coefficient_field,
    e_basis,
    e_coordinates,
    fixed_space_basis,
    regular_u,
    triality_action,
    triality_matrix,
    triality_on_e,
)
from src.d4cheval.algebra import (
    ad_square_vanishes,
    ad_u_matrix,
    expected_triality_on_e,
    identity_matrix,
    jacobi_failures,
    matmul,
    nilpotency_degree,
)
from src.utilities.exceptions import CoefficientError, InputError

A1, A2, A3, A4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


class TestCoefficientField:

    def test_rationals(self):
        assert coefficient_field(0) == QQ

    def test_odd_prime(self):
        assert coefficient_field(5).mod == 5

    def test_two_is_not_invertible(self):
        with pytest.raises(CoefficientError):
            coefficient_field(2)

    def test_not_prime(self):
        with pytest.raises(InputError):
            coefficient_field(9)


class TestBracket:

    def test_simple_roots(self):
        K = QQ
        X = ad_bracket(LieUVector.root_vector(K, A1), LieUVector.root_vector(K, A2))
        assert X == LieUVector.root_vector(K, (1, 1, 0, 0))
        assert ad_bracket(LieUVector.root_vector(K, A1), LieUVector.root_vector(K, A3)).is_zero()

    def test_terms(self):
        v = LieUVector.from_terms(QQ, {A1: 1, (1, 1, 0, 0): Fraction(1, 2)})
        assert v.terms() == {"a1": "1", "a1+a2": "1/2"}

    def test_domains_must_agree(self):
        with pytest.raises(InputError):
            LieUVector.root_vector(QQ, A1) + LieUVector.root_vector(coefficient_field(5), A1)

    @pytest.mark.parametrize("p", [0, 3])
    def test_jacobi(self, p):
        assert jacobi_failures(coefficient_field(p)) == []

    def test_ad_square(self):
        assert ad_square_vanishes(QQ)

    def test_ad_matrix_is_nilpotent(self):
        M = ad_matrix(QQ, A2)
        power = M
        for _ in range(3):
            power = matmul(QQ, power, M)
        assert all(x == QQ.zero for row in power for x in row)


class TestRegularUnipotent:

    def test_root_group_step(self):
        image = ad_u_action([(A1, 1)], LieUVector.root_vector(QQ, A2))
        assert image == LieUVector.from_terms(QQ, {A2: 1, (1, 1, 0, 0): 1})

    def test_ad_u_is_unipotent(self):
        assert nilpotency_degree(QQ, ad_u_matrix(QQ, regular_u())) > 0

    @pytest.mark.parametrize("p", [0, 3, 7])
    def test_e_basis_is_fixed(self, p):
        K = coefficient_field(p)
        for e in e_basis(K):
            assert ad_u_action(regular_u(), e) == e

    @pytest.mark.parametrize("p", [0, 5])
    def test_fixed_space_dimension(self, p):
        assert len(fixed_space_basis(coefficient_field(p))) == 4

    def test_e_coordinates(self):
        E = e_basis(QQ)
        v = E[0] + E[2].scale(3) - E[3]
        assert e_coordinates(v) == [QQ(1), QQ(0), QQ(3), QQ(-1)]

    def test_not_in_span(self):
        with pytest.raises(InputError):
            e_coordinates(LieUVector.root_vector(QQ, A2))


class TestTriality:

    @pytest.mark.parametrize("p", [0, 5])
    @pytest.mark.parametrize("name", ["lambda", "mu"])
    def test_action_on_e(self, p, name):
        K = coefficient_field(p)
        assert triality_on_e(K, name) == expected_triality_on_e(K, name)

    def test_lambda_swaps_e2_and_e3(self):
        E = e_basis(QQ)
        assert triality_action("lambda", E[1]) == E[2]

    def test_orders(self):
        lam, mu = triality_matrix(QQ, "lambda"), triality_matrix(QQ, "mu")
        one = identity_matrix(QQ)
        assert matmul(QQ, lam, lam) == one
        assert matmul(QQ, mu, matmul(QQ, mu, mu)) == one

    def test_permutes_simple_roots(self):
        image = triality_action("mu", LieUVector.root_vector(QQ, A2))
        assert image == LieUVector.root_vector(QQ, A2)

    def test_unknown(self):
        with pytest.raises(InputError):
            triality_matrix(QQ, "nu")
