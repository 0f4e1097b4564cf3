"""
Tests for finite rings built from spec strings.
"""

import numpy as np
import pytest

from src.matrings import make_ring
from src.utilities.exceptions import RingSpecError


class TestPrimeField:

    def test_f3(self):
        R = make_ring("F(3)")
        assert R.order == 3
        assert R.is_field
        assert R.from_int(5) == 2
        assert R.inv(2) == 2
        assert list(R.units()) == [1, 2]

    def test_whitespace_is_ignored(self):
        assert make_ring(" F( 5 ) ") is make_ring("F(5)")

    def test_non_prime(self):
        with pytest.raises(RingSpecError):
            make_ring("F(4)")


class TestExtensionField:

    def test_f4_generator(self):
        R = make_ring("F(2,2)")
        x = R.symbols["x"]
        assert R.order == 4
        assert R.is_field
        assert R.parse_element("x^2") == R.parse_element("x+1")
        assert R.power(x, 3) == R.one
        assert R.inv(x) == R.parse_element("x+1")

    def test_frobenius(self):
        R = make_ring("F(2,2)")
        frob = R.automorphism("frob")
        x = R.symbols["x"]
        assert frob[x] == R.mul(x, x)
        assert np.array_equal(R.automorphism("frob^2"), R.elements())

    def test_frobenius_trivial_on_prime_field(self):
        R = make_ring("F(3)")
        assert np.array_equal(R.automorphism("frob"), R.elements())

    def test_format_coordinates(self):
        R = make_ring("F(3,2)")
        assert R.format_element(5) == "(2,1)"
        assert R.parse_element("(2,1)") == 5

    def test_order_limit(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2,11)")


class TestTruncatedExtension:

    def test_dual_numbers(self):
        R = make_ring("F(2)[e]/e^2")
        e = R.symbols["e"]
        assert R.order == 4
        assert not R.is_field
        assert R.mul(e, e) == R.zero
        assert R.is_unit(R.parse_element("1+e"))
        assert not R.is_unit(e)
        assert len(R.units()) == 2

    def test_higher_truncation(self):
        R = make_ring("F(3)[a]/a^3")
        a = R.symbols["a"]
        assert R.order == 27
        assert R.power(a, 2) != R.zero
        assert R.power(a, 3) == R.zero

    def test_over_extension_field(self):
        R = make_ring("F(2,2)[e]/e^2")
        assert R.order == 16
        assert R.field_degree == 2
        assert set(R.symbols) == {"x", "e"}

    def test_truncation_exponent(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2)[e]/e^1")

    def test_mismatched_symbol(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2)[e]/d^2")


class TestProduct:

    def test_units_and_pairs(self):
        R = make_ring("F(2)xF(2)")
        assert R.order == 4
        assert not R.is_field
        assert R.parse_element("<1|0>") == 1
        assert R.parse_element("<1|1>") == R.one
        assert list(R.units()) == [R.one]
        assert R.format_element(2) == "<0|1>"

    def test_swap(self):
        R = make_ring("F(2)xF(2)")
        swap = R.automorphism("swap")
        assert swap[R.parse_element("<1|0>")] == R.parse_element("<0|1>")

    def test_componentwise(self):
        R = make_ring("F(2,2)xF(2,2)")
        table = R.automorphism("(frob,id)")
        element = R.parse_element("<x|x>")
        assert table[element] == R.parse_element("<x+1|x>")

    def test_mixed_characteristic(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2)xF(3)")

    def test_swap_needs_identical_factors(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2)xF(2,2)").automorphism("swap")

    def test_swap_needs_product(self):
        with pytest.raises(RingSpecError):
            make_ring("F(2)").automorphism("swap")


class TestLiterals:

    @pytest.mark.parametrize("spec", ["", "G(2)", "F(2)x", "F(2)[e]", "(F(2)"])
    def test_bad_specs(self, spec):
        with pytest.raises(RingSpecError):
            make_ring(spec)

    def test_unknown_symbol(self):
        with pytest.raises(RingSpecError):
            make_ring("F(3)").parse_element("y")

    def test_expression(self):
        R = make_ring("F(3)[e]/e^2")
        assert R.parse_element("2*(1+e) - e") == R.parse_element("2+e")

    def test_axioms(self):
        make_ring("F(3,2)[e]/e^2").verify_axioms(samples=500, seed=1)
