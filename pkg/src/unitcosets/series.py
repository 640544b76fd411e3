"""Truncated power series in Q[[z]] with the derivation d/dz."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .exact_arith import Polynomial, RationalFunction, as_fraction, format_rational, poly_str


class NotAUnit(ArithmeticError):
    """Series with zero constant term where a unit was required."""


class PoleAtOrigin(ArithmeticError):
    """Rational function with a pole at z = 0; shift it first."""


class TruncatedSeries:
    """Coefficients of z^0 .. z^(order-1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("series order must be positive")
        if len(cs) < order:
            cs.extend([Fraction(0)] * (order - len(cs)))
        self.coeffs = tuple(cs[:order])

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls([c], order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[:order], order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all vanish."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("TruncatedSeries", self.coeffs))

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __add__(self, other):
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return series_add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return series_add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries((c * x for x in self.coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(x, order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    m = min(a.order, b.order)
    return TruncatedSeries((x + y for x, y in zip(a.coeffs[:m], b.coeffs[:m])), m)


def _scaled_ints(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = lcm(*(c.denominator for c in cs)) if cs else 1
    return [c.numerator * (d // c.denominator) for c in cs], d


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Schoolbook Cauchy product; inner sums run over integers."""
    m = min(a.order, b.order)
    ai, da = _scaled_ints(a.coeffs[:m])
    bi, db = _scaled_ints(b.coeffs[:m])
    nz_a = [(i, x) for i, x in enumerate(ai) if x]
    out = [0] * m
    for i, x in nz_a:
        for j in range(m - i):
            y = bi[j]
            if y:
                out[i + j] += x * y
    d = da * db
    return TruncatedSeries((Fraction(c, d) for c in out), m)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise NotAUnit("series with zero constant term has no inverse")
    m = a.order
    b = [Fraction(1) / a0]
    for n in range(1, m):
        s = sum((a.coeffs[k] * b[n - k] for k in range(1, n + 1) if a.coeffs[k]), Fraction(0))
        b.append(-s / a0)
    return TruncatedSeries(b, m)


def series_derive(a: TruncatedSeries) -> TruncatedSeries:
    if a.order < 2:
        raise ValueError("derivative needs order >= 2")
    return TruncatedSeries((i * c for i, c in enumerate(a.coeffs) if i), a.order - 1)


def rf_to_series(f: RationalFunction, order: int) -> TruncatedSeries:
    """Expansion of f at z = 0 by long division of ascending coefficients."""
    q = f.den.coeffs
    q0 = q[0] if q else Fraction(0)
    if q0 == 0:
        raise PoleAtOrigin(f"{f} has a pole at z = 0")
    p = f.num.coeffs
    out: list[Fraction] = []
    for n in range(order):
        s = p[n] if n < len(p) else Fraction(0)
        for k in range(1, min(n, len(q) - 1) + 1):
            s -= q[k] * out[n - k]
        out.append(s / q0)
    return TruncatedSeries(out, order)


def series_str(a: TruncatedSeries, var: str = "z") -> str:
    return poly_str(Polynomial(a.coeffs), var) + f" + O({var}^{a.order})"
