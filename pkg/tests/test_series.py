from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latpath.series import (
    DivisionByNonUnit,
    NonSquareConstantTerm,
    Series,
    div,
    moebius,
    rational,
    sqrt,
)


def geometric(order):
    return rational([1], [1, -1], order)


class TestRingOps:
    def test_mul_difference_of_squares(self):
        assert (Series([1, 1], 4) * Series([1, -1], 4)).int_coeffs() == [1, 0, -1, 0, 0]

    def test_x_times_geometric(self):
        got = Series.x(4) * geometric(4)
        assert got.int_coeffs() == [0, 1, 1, 1, 1]

    def test_additive_identity(self):
        s = Series([1, 1], 3)
        assert (s + Series.zero(3)) == s
        assert (s + 0) == s

    def test_result_order_is_min_of_operands(self):
        a = Series([1, 2, 3], 7)
        b = Series([1], 3)
        assert (a + b).order == 3
        assert (a * b).order == 3
        assert (a - b).order == 3

    def test_scalar_arithmetic(self):
        s = Series([1, 2], 3)
        assert (2 * s).int_coeffs() == [2, 4, 0, 0]
        assert (s - 1).int_coeffs() == [0, 2, 0, 0]
        assert (1 - s).int_coeffs() == [0, -2, 0, 0]

    def test_pow(self):
        assert (Series([1, 1], 4) ** 2).int_coeffs() == [1, 2, 1, 0, 0]
        assert (Series.x(5) ** 3).valuation() == 3
        assert (Series([2], 2) ** 0) == Series.one(2)

    def test_truncate(self):
        s = Series([1, 2, 3, 4], 3)
        assert s.truncate(1).coeffs == (1, 2)
        with pytest.raises(ValueError):
            s.truncate(5)

    def test_exact_rationals(self):
        s = Series([Fraction(1, 2), Fraction(1, 3)], 2)
        assert (s + s).coeffs[0] == 1
        with pytest.raises(ValueError):
            s.int_coeffs()


class TestDiv:
    def test_shift_out_common_valuation(self):
        got = div(Series([0, 1, 1], 4), Series([0, 1], 4))
        assert got.int_coeffs() == [1, 1, 0, 0]

    def test_geometric(self):
        assert div(Series.one(5), Series([1, -1], 5)).int_coeffs() == [1] * 6

    def test_valuation_aware(self):
        got = div(Series([0, 0, 1], 4), Series([1, -2], 4))
        assert got.int_coeffs() == [0, 0, 1, 2, 4]

    def test_order_reduced_by_denominator_valuation(self):
        q = div(Series([0, 0, 1, 1], 9), Series([0, 0, 2], 9))
        assert q.order == 7

    def test_rejects_nonunit(self):
        with pytest.raises(DivisionByNonUnit):
            div(Series([1], 4), Series([0, 1], 4))
        with pytest.raises(DivisionByNonUnit):
            div(Series([1], 4), Series.zero(4))

    def test_zero_numerator(self):
        assert div(Series.zero(5), Series([0, 3], 5)).is_zero()


class TestSqrt:
    def test_perfect_square(self):
        assert sqrt(Series([1, -2, 1], 5)).int_coeffs() == [1, -1, 0, 0, 0, 0]

    def test_one(self):
        assert sqrt(Series.one(4)) == Series.one(4)

    def test_catalan_radical(self):
        assert sqrt(Series([1, -4], 4)).int_coeffs() == [1, -2, -2, -4, -10]

    def test_rational_constant(self):
        got = sqrt(Series([Fraction(9, 4)], 3))
        assert got.coeffs[0] == Fraction(3, 2)

    def test_rejects_non_square(self):
        with pytest.raises(NonSquareConstantTerm):
            sqrt(Series([2], 3))
        with pytest.raises(NonSquareConstantTerm):
            sqrt(Series([0, 1], 3))
        with pytest.raises(NonSquareConstantTerm):
            sqrt(Series([-1], 3))


class TestMoebius:
    def test_identity_transform(self):
        B = Series([1, 5, 7], 4)
        got = moebius(Series.zero(4), Series.one(4), Series.one(4), Series.zero(4), B)
        assert got.coeffs == B.coeffs

    def test_constant_transform(self):
        B = Series([2, 3], 4)
        got = moebius(Series.one(4), Series.zero(4), Series.one(4), Series.zero(4), B)
        assert got == Series.one(4)

    def test_rejects_nonunit_denominator(self):
        with pytest.raises(DivisionByNonUnit):
            moebius(
                Series.one(3), Series.zero(3), Series.zero(3), Series.one(3),
                Series.x(3),
            )


fractions_st = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def series_st(order=10):
    return st.builds(
        lambda cs: Series(cs), st.lists(fractions_st, min_size=order + 1, max_size=order + 1)
    )


@given(a=series_st(), b=series_st())
@settings(max_examples=120)
def test_div_inverts_mul(a, b):
    v = b.valuation()
    if v is None:
        return
    assert div(a * b, b) == a.truncate(a.order - v)


@given(g=series_st())
@settings(max_examples=120)
def test_sqrt_squares_back(g):
    if g.coeffs[0] <= 0:
        return
    s = g * g
    root = sqrt(s)
    assert root == g
    assert root * root == s


@given(a=series_st(), b=series_st(), m=st.integers(min_value=0, max_value=10))
@settings(max_examples=120)
def test_truncation_commutes_with_ring_ops(a, b, m):
    am, bm = a.truncate(m), b.truncate(m)
    assert (a + b).truncate(m) == am + bm
    assert (a - b).truncate(m) == am - bm
    assert (a * b).truncate(m) == am * bm
