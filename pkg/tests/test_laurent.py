from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import poly_eval, poly_mul
from subconv.errors import NotDivisible, ZeroArgument
from subconv.laurent import (
    ONE,
    ONE_PLUS_Z,
    ZERO,
    LaurentPolynomial as LP,
    add,
    coset_abs_sums,
    coset_signed_sums,
    divide_by_one_plus_z,
    evaluate,
    multiply,
    symbol_power,
    to_rational,
    upsample,
)

FOUR_POINT_A = LP([-1, 0, 9, 16, 9, 0, -1], -3) / 16
FOUR_POINT_Q = LP([-1, 1, 8, 8, 1, -1], -3) / 16

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def laurents(draw, max_len=7):
    coeffs = draw(st.lists(small_fractions, max_size=max_len))
    return LP(coeffs, draw(st.integers(-6, 6)))


def as_dict(p):
    return dict(p.items())


class TestCanonicalForm:
    def test_trims_zero_ends(self):
        p = LP([0, 0, 1, 2, 0], -1)
        assert p.lowest_degree == 1
        assert p.coefficients == (1, 2)

    def test_zero(self):
        assert LP([0, 0], 5) == ZERO
        assert ZERO.coefficients == ()
        assert ZERO.lowest_degree == 0

    def test_equality_ignores_construction_path(self):
        assert LP([F(2, 4)], 0) == LP.from_dict({0: F(1, 2)})

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            to_rational(0.5)

    def test_unicode_minus(self):
        assert to_rational("−1/16") == F(-1, 16)


class TestAdd:
    def test_identity(self):
        assert ONE_PLUS_Z + ZERO == ONE_PLUS_Z

    def test_inverse(self):
        assert add(ONE_PLUS_Z, LP([-1, -1])) == ZERO

    def test_hand_sum(self):
        assert add(LP([1, 1], -1), ONE_PLUS_Z) == LP([1, 2, 1], -1)


class TestMultiply:
    def test_square(self):
        assert multiply(ONE_PLUS_Z, ONE_PLUS_Z) == LP([1, 2, 1])

    def test_divergent_symbol(self):
        assert multiply(ONE_PLUS_Z, LP([2, -1])) == LP([2, 1, -1])

    def test_absorbing(self):
        assert multiply(LP([3, 4], -2), ZERO) == ZERO

    @given(laurents(), laurents())
    def test_matches_dict_convolution(self, p, r):
        assert as_dict(p * r) == poly_mul(as_dict(p), as_dict(r))

    @given(laurents(), laurents())
    def test_lowest_degrees_add(self, p, r):
        if not p.is_zero() and not r.is_zero():
            assert (p * r).lowest_degree == p.lowest_degree + r.lowest_degree


class TestUpsample:
    def test_definition(self):
        assert upsample(ONE_PLUS_Z, 2) == LP([1, 0, 1])

    def test_identity(self):
        p = LP([1, -2, 3], -1)
        assert upsample(p, 1) == p

    def test_negative_degrees(self):
        assert upsample(LP.from_dict({-1: 1, 1: 3}), 4) == LP.from_dict({-4: 1, 4: 3})

    @given(laurents(), st.integers(1, 5))
    def test_is_substitution(self, p, m):
        assert as_dict(upsample(p, m)) == {m * d: c for d, c in p.items()}


class TestEvaluate:
    def test_necessary_conditions_of_linear_spline(self):
        a = LP([1, 2, 1]) / 2
        assert evaluate(a, 1) == 2
        assert evaluate(a, -1) == 0

    def test_divergent_q(self):
        assert evaluate(LP([2, -1]), -1) == 3

    def test_zero_argument(self):
        with pytest.raises(ZeroArgument):
            evaluate(LP([1, 1], -1), 0)
        assert evaluate(LP([5, 1]), 0) == 5

    @given(laurents(), st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(bool))
    def test_matches_direct_sum(self, p, x):
        assert evaluate(p, x) == poly_eval(as_dict(p), x)

    @given(laurents(), laurents(), st.sampled_from([1, -1]))
    def test_homomorphism(self, p, r, x):
        assert evaluate(p * r, x) == evaluate(p, x) * evaluate(r, x)


class TestDivideByOnePlusZ:
    def test_linear_spline(self):
        assert divide_by_one_plus_z(LP([1, 2, 1]) / 2) == ONE_PLUS_Z / 2

    def test_four_point(self):
        q = divide_by_one_plus_z(FOUR_POINT_A)
        assert q == FOUR_POINT_Q
        # oracle: multiply back with dict convolution
        assert poly_mul(as_dict(q), {0: 1, 1: 1}) == as_dict(FOUR_POINT_A)

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            divide_by_one_plus_z(LP([1, 0, 1]))

    def test_monomial_not_divisible(self):
        with pytest.raises(NotDivisible):
            divide_by_one_plus_z(LP.monomial(3))

    @given(laurents())
    def test_round_trip(self, p):
        assert divide_by_one_plus_z(p * ONE_PLUS_Z) == p


class TestSymbolPower:
    def test_base_case(self):
        q = LP([1, 3, -2], -1)
        assert symbol_power(q, 1) == q

    def test_linear_spline_square(self):
        assert symbol_power(ONE_PLUS_Z / 2, 2) == LP([1, 1, 1, 1]) / 4

    def test_constant(self):
        assert symbol_power(ONE, 5) == ONE

    def test_explicit_product(self):
        q = LP([2, -1])
        expected = q * upsample(q, 2) * upsample(q, 4)
        assert symbol_power(q, 3) == expected

    @settings(max_examples=40)
    @given(laurents(max_len=4), st.integers(1, 3), st.integers(1, 3))
    def test_splitting_law(self, q, l1, l2):
        lhs = symbol_power(q, l1 + l2)
        rhs = symbol_power(q, l1) * upsample(symbol_power(q, l2), 2 ** l1)
        assert lhs == rhs


class TestCosetSums:
    def test_abs_linear(self):
        assert coset_abs_sums(ONE_PLUS_Z / 2, 2) == [F(1, 2), F(1, 2)]

    def test_abs_four_point(self):
        assert coset_abs_sums(FOUR_POINT_Q, 2) == [F(10, 16), F(10, 16)]

    def test_abs_zero(self):
        assert coset_abs_sums(ZERO, 3) == [0, 0, 0]

    def test_signed_divergent(self):
        assert coset_signed_sums(LP([2, -1]), 2) == [2, -1]

    def test_signed_linear(self):
        assert coset_signed_sums(ONE_PLUS_Z / 2, 2) == [F(1, 2), F(1, 2)]

    def test_single_coset(self):
        p = LP([3, -1, F(1, 2)], -2)
        assert coset_signed_sums(p, 1) == [evaluate(p, 1)]

    def test_negative_degrees_use_floor_residues(self):
        # degree -3 is odd, degree -2 even
        assert coset_signed_sums(LP([5, 7], -3), 2) == [7, 5]

    @given(laurents(), st.integers(1, 6))
    def test_signed_sum_total(self, p, m):
        assert sum(coset_signed_sums(p, m)) == evaluate(p, 1)

    @given(laurents())
    def test_even_minus_odd(self, p):
        s_e, s_o = coset_signed_sums(p, 2)
        assert s_e - s_o == evaluate(p, -1)

    @given(laurents(), st.integers(1, 6))
    def test_abs_dominates_signed(self, p, m):
        for a, s in zip(coset_abs_sums(p, m), coset_signed_sums(p, m)):
            assert a >= abs(s)
