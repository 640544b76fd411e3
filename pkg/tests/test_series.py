from fractions import Fraction

import pytest
from hypothesis import given, settings

from unitcosets.exact_arith import Polynomial, RationalFunction, rf
from unitcosets.series import (
    NotAUnit,
    PoleAtOrigin,
    TruncatedSeries,
    rf_to_series,
    series_add,
    series_derive,
    series_inv,
    series_mul,
)

from conftest import S, rational_functions, unit_series


def test_add_examples():
    assert series_add(S(1, 1, 0, 0), S(1, -1, 0, 0)) == S(2, 0, 0, 0)
    a = S(3, 1, 4, 1)
    assert series_add(a, S(0, 0, 0, 0)) == a
    assert series_add(S(0, 1, 1), S(0, -1, 0)) == S(0, 0, 1)


def test_add_truncates_to_min_order():
    assert series_add(S(1, 2, 3), S(1, 1)).order == 2


def test_mul_examples():
    assert series_mul(S(1, 1, 0, 0), S(1, -1, 0, 0)) == S(1, 0, -1, 0)
    a = S(Fraction(1, 3), 5, -2)
    assert series_mul(a, S(1, 0, 0)) == a
    assert series_mul(S(1, 1, 1), S(1, 1, 0)) == S(1, 2, 2)


def test_inv_examples():
    assert series_inv(S(1, -1, 0, 0)) == S(1, 1, 1, 1)
    assert series_inv(S(2, 0, 0)) == S(Fraction(1, 2), 0, 0)
    with pytest.raises(NotAUnit):
        series_inv(S(0, 1, 0))


def test_derive_examples():
    assert series_derive(S(1, 2, 3)) == S(2, 6)
    assert series_derive(S(7, 0, 0, 0)) == S(0, 0, 0)
    assert series_derive(S(0, 0, 0, 1)) == S(0, 0, 3)


def test_rf_to_series_examples():
    assert rf_to_series(rf([1], [1, -1]), 3) == S(1, 1, 1)
    assert rf_to_series(rf([0, 1], [1, -1]), 3) == S(0, 1, 1)
    with pytest.raises(PoleAtOrigin):
        rf_to_series(rf([1], [0, 1]), 3)


def test_rf_to_series_against_sympy():
    import sympy

    zs = sympy.symbols("z")
    f = rf([2, -1, 3], [3, 1, 0, 2])
    expr = (2 - zs + 3 * zs**2) / (3 + zs + 2 * zs**3)
    ref = sympy.series(expr, zs, 0, 12).removeO()
    expected = [Fraction(str(ref.coeff(zs, k))) for k in range(12)]
    assert rf_to_series(f, 12) == TruncatedSeries(expected)


@given(unit_series(order=10))
@settings(max_examples=200, deadline=None)
def test_inverse_property(a):
    assert series_mul(a, series_inv(a)) == TruncatedSeries([1], a.order)


@given(unit_series(order=9), unit_series(order=9))
@settings(max_examples=60, deadline=None)
def test_leibniz(a, b):
    lhs = series_derive(series_mul(a, b))
    rhs = series_add(series_mul(series_derive(a), b), series_mul(a, series_derive(b)))
    assert lhs == rhs


@given(rational_functions(regular_at_zero=True), rational_functions(regular_at_zero=True))
@settings(max_examples=60, deadline=None)
def test_expansion_is_ring_homomorphism(f, g):
    m = 10
    assert rf_to_series(f * g, m) == series_mul(rf_to_series(f, m), rf_to_series(g, m))
    assert rf_to_series(f + g, m) == series_add(rf_to_series(f, m), rf_to_series(g, m))
