from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import sympy

from multalg.series import (
    RationalSeries,
    UniPoly,
    one_minus_power,
    weight_denominator,
)

t = sympy.Symbol("t")

coeff_lists = st.lists(st.integers(-6, 6), max_size=7)


def to_sympy(p: UniPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], t)


def test_construction_trims_and_compares():
    assert UniPoly([1, 2, 0, 0]) == UniPoly([1, 2])
    assert UniPoly([]).is_zero()
    assert UniPoly([0]).is_zero()
    assert UniPoly([1, 1]).degree == 1
    assert UniPoly([]).degree == -1
    assert UniPoly.term(3, 4).coefficient(4) == 3


def test_str_matches_cli_convention():
    assert str(UniPoly([1, 1, 2, 1, 1])) == "1 + t + 2*t^2 + t^3 + t^4"
    assert str(UniPoly([1, 1, -1])) == "1 + t - t^2"
    assert str(UniPoly([0, 1])) == "t"
    assert str(UniPoly([])) == "0"
    assert str(UniPoly([-2, 0, 3])) == "-2 + 3*t^2"


@given(coeff_lists, coeff_lists)
@settings(max_examples=120)
def test_arithmetic_matches_sympy(a, b):
    pa, pb = UniPoly(a), UniPoly(b)
    assert to_sympy(pa + pb) == to_sympy(pa) + to_sympy(pb)
    assert to_sympy(pa - pb) == to_sympy(pa) - to_sympy(pb)
    assert to_sympy(pa * pb) == to_sympy(pa) * to_sympy(pb)


@given(coeff_lists, st.integers(-3, 3))
@settings(max_examples=60)
def test_evaluation(a, x):
    p = UniPoly(a)
    assert p(x) == sum(c * x**i for i, c in enumerate(p.coeffs))


@given(coeff_lists, coeff_lists)
@settings(max_examples=80)
def test_divide_exact_inverts_product(a, b):
    pa, pb = UniPoly(a), UniPoly(b)
    if pb.is_zero():
        return
    assert (pa * pb).divide_exact(pb) == pa


def test_divide_exact_rejects_remainder():
    with pytest.raises(ValueError):
        UniPoly([1, 1, 1]).divide_exact(UniPoly([1, 1]))


def test_shape_predicates():
    assert UniPoly([1, 1, 2, 1, 1]).is_palindromic()
    assert not UniPoly([1, 2]).is_palindromic()
    assert UniPoly([1, 0, 1]).is_monic_top()
    assert not UniPoly([1, 2]).is_monic_top()
    assert UniPoly([1, 0, 2]).nonnegative()
    assert not UniPoly([1, -1]).nonnegative()


def test_helpers():
    assert one_minus_power(3) == UniPoly([1, 0, 0, -1])
    assert weight_denominator([1, 2]) == UniPoly([1, -1]) * UniPoly([1, 0, -1])


# ------------------------------------------------------------ rational series


def test_reduction_cancels_common_factor():
    # (1-t^2)/(1-t) = 1 + t
    s = RationalSeries(one_minus_power(2), one_minus_power(1))
    assert s.is_polynomial()
    assert s.as_polynomial() == UniPoly([1, 1])


def test_embedded_point_display():
    s = RationalSeries(UniPoly([1, 1, -1]), UniPoly([1, -1]))
    assert str(s) == "(1 + t - t^2)/(1 - t)"
    assert not s.is_polynomial()
    with pytest.raises(ValueError):
        s.as_polynomial()


def test_normalization_uses_power_series_sign():
    # whatever representation comes in, the denominator's lowest nonzero
    # coefficient ends up positive, so 1/(1-t) never prints as -1/(t-1)
    s = RationalSeries(UniPoly([-1]), UniPoly([-1, 1]))
    assert s == RationalSeries(UniPoly([1]), UniPoly([1, -1]))
    assert str(s) == "(1)/(1 - t)"


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=80)
def test_equality_invariant_under_common_factor(a, b, c):
    pa, pb, pc = UniPoly(a), UniPoly(b), UniPoly(c)
    if pb.is_zero() or pc.is_zero():
        return
    assert RationalSeries(pa, pb) == RationalSeries(pa * pc, pb * pc)


def test_series_arithmetic():
    one_over = RationalSeries(UniPoly([1]), one_minus_power(1))
    poly = RationalSeries.from_polynomial(UniPoly([1, 1]))
    prod = one_over * poly
    assert prod == RationalSeries(UniPoly([1, 1]), one_minus_power(1))
    total = one_over + one_over
    assert total == RationalSeries(UniPoly([2]), one_minus_power(1))


def test_from_weight_ratio():
    # degrees {1,2} over weights {1,1}: (1-t)(1-t^2)/(1-t)^2 = 1 + t
    s = RationalSeries.from_weight_ratio((1, 2), (1, 1))
    assert s.is_polynomial() and s.as_polynomial() == UniPoly([1, 1])


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalSeries(UniPoly([1]), UniPoly([]))
