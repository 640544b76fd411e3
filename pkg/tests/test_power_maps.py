from fractions import Fraction

import pytest
from hypothesis import given, settings

from unitcosets.exact_arith import rf
from unitcosets.power_maps import OnePlusSeries, SeriesTuple, pow_u, tuple_pow, unit_decompose
from unitcosets.series import NotAUnit, TruncatedSeries, rf_to_series, series_derive, series_mul

from conftest import S, exponents, one_plus_series


def power_by_recurrence(g, u):
    """Independent oracle: h = g**u solves g h' = u g' h with h(0) = 1."""
    u = Fraction(u)
    h = [Fraction(1)]
    for n in range(1, g.order):
        s = sum(((u * k - (n - k)) * g[k] * h[n - k] for k in range(1, n + 1)), Fraction(0))
        h.append(s / n)
    return TruncatedSeries(h, g.order)


def test_unit_decompose_examples():
    assert unit_decompose(S(2, 2)) == (2, OnePlusSeries([1, 1]))
    assert unit_decompose(S(1, -1)) == (1, OnePlusSeries([1, -1]))
    assert unit_decompose(S(3)) == (3, OnePlusSeries([1]))
    with pytest.raises(NotAUnit):
        unit_decompose(S(0, 1))


def test_sqrt_one_plus_z():
    import sympy

    zs = sympy.symbols("z")
    ref = sympy.series(sympy.sqrt(1 + zs), zs, 0, 4).removeO()
    expected = [Fraction(str(ref.coeff(zs, k))) for k in range(4)]
    assert expected == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
    assert pow_u(S(1, 1, 0, 0), Fraction(1, 2)) == TruncatedSeries(expected)


def test_trivial_exponents():
    g = OnePlusSeries([1, 3, -2, 5])
    assert pow_u(g, 0) == OnePlusSeries([1], 4)
    assert pow_u(g, 1) == g


def test_tuple_pow_examples():
    B = (S(1, 1, 0, 0), S(1, -1, 0, 0))
    assert tuple_pow(B, (1, 1)) == S(1, 0, -1, 0)
    assert tuple_pow(B, (0, 0)) == S(1, 0, 0, 0)
    half = Fraction(1, 2)
    assert tuple_pow((S(1, 1, 0), S(1, -1, 0)), (half, half)) == S(1, 0, Fraction(-1, 2))
    with pytest.raises(ValueError):
        tuple_pow(B, (1,))


def test_one_plus_series_invariant():
    with pytest.raises(ValueError):
        OnePlusSeries([2, 1])
    with pytest.raises(ValueError):
        SeriesTuple([S(1, 1), S(1, 1, 1)])


@given(one_plus_series(order=10), exponents)
@settings(max_examples=100, deadline=None)
def test_binomial_sum_matches_recurrence(g, u):
    assert pow_u(g, u) == power_by_recurrence(g, u)


def test_power_of_rational_function_matches_sympy():
    import sympy

    zs = sympy.symbols("z")
    u = Fraction(-2, 3)
    g = rf_to_series(rf([1, 2], [1, 0, -3]), 8)
    ref = sympy.series(((1 + 2 * zs) / (1 - 3 * zs**2)) ** sympy.Rational(-2, 3), zs, 0, 8).removeO()
    expected = [Fraction(str(ref.coeff(zs, k))) for k in range(8)]
    assert pow_u(g, u) == TruncatedSeries(expected)


@given(one_plus_series(), one_plus_series(), exponents)
@settings(max_examples=50, deadline=None)
def test_power_of_product(f, g, u):
    assert pow_u(series_mul(f, g), u) == series_mul(pow_u(f, u), pow_u(g, u))


@given(one_plus_series(), exponents, exponents)
@settings(max_examples=50, deadline=None)
def test_exponent_laws(f, u, v):
    assert pow_u(f, u + v) == series_mul(pow_u(f, u), pow_u(f, v))
    assert pow_u(pow_u(f, u), v) == pow_u(f, u * v)


@given(one_plus_series(), exponents)
@settings(max_examples=50, deadline=None)
def test_derivative_of_power(f, u):
    lhs = series_derive(pow_u(f, u))
    rhs = series_mul(u * pow_u(f, u - 1), series_derive(f))
    assert lhs == rhs


@given(one_plus_series())
@settings(max_examples=30, deadline=None)
def test_integer_powers_are_products(g):
    acc = g
    for q in (2, 3, 4):
        acc = series_mul(acc, g)
        assert pow_u(g, q) == series_mul(pow_u(g, q - 1), g)
    assert pow_u(g, 4) == acc


@given(one_plus_series())
@settings(max_examples=30, deadline=None)
def test_roots_invert(g):
    for q in (2, 3, 5):
        assert pow_u(pow_u(g, Fraction(1, q)), q) == g
