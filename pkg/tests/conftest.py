from fractions import Fraction

import pytest
from hypothesis import strategies as st

from unitcosets.exact_arith import Polynomial, RationalFunction, rf
from unitcosets.series import TruncatedSeries

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
exponents = small_rationals


@st.composite
def polynomials(draw, max_degree=4, nonzero=False):
    cs = draw(st.lists(small_rationals, min_size=1, max_size=max_degree + 1))
    p = Polynomial(cs)
    if nonzero and p.is_zero():
        p = Polynomial([1])
    return p


@st.composite
def rational_functions(draw, max_degree=3, regular_at_zero=False, nonzero=False):
    num = draw(polynomials(max_degree, nonzero=nonzero))
    den = draw(polynomials(max_degree, nonzero=True))
    if regular_at_zero and den(0) == 0:
        den = den + 1 if (den + 1)(0) != 0 else Polynomial([1])
        if den.is_zero():
            den = Polynomial([1])
    return RationalFunction(num, den)


@st.composite
def one_plus_series(draw, order=8):
    from unitcosets.power_maps import OnePlusSeries

    tail = draw(st.lists(small_rationals, min_size=order - 1, max_size=order - 1))
    return OnePlusSeries([1] + tail, order)


@st.composite
def unit_series(draw, order=8):
    c0 = draw(small_rationals.filter(bool))
    tail = draw(st.lists(small_rationals, min_size=order - 1, max_size=order - 1))
    return TruncatedSeries([c0] + tail, order)


def S(*coeffs, order=None):
    return TruncatedSeries(coeffs, order)


@pytest.fixture
def toy_system():
    from unitcosets.dependence import SystemInstance

    return SystemInstance.from_rational(
        [rf([1]), rf([1]), rf([-1])],
        [[rf([1, 1])], [rf([1, -1])], [rf([1])]],
        32,
    )
