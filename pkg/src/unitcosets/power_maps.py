"""The group 1 + zQ[[z]] and its rational powers."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import as_fraction
from .series import NotAUnit, TruncatedSeries, series_mul

ExponentVector = tuple  # tuple[Fraction, ...]


class OnePlusSeries(TruncatedSeries):
    """Truncated series with constant term exactly 1."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable, order: int | None = None):
        super().__init__(coeffs, order)
        if self.coeffs[0] != 1:
            raise ValueError(f"1-unit must have constant term 1, got {self.coeffs[0]}")

    @classmethod
    def one(cls, order: int) -> OnePlusSeries:
        return cls([1], order)

    @classmethod
    def of(cls, s: TruncatedSeries) -> OnePlusSeries:
        return s if isinstance(s, OnePlusSeries) else cls(s.coeffs, s.order)

    @property
    def body(self) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, self.order)


class SeriesTuple(tuple):
    """Nonempty tuple of 1-units sharing one truncation order."""

    def __new__(cls, entries: Iterable[TruncatedSeries]):
        entries = tuple(OnePlusSeries.of(e) for e in entries)
        if not entries:
            raise ValueError("series tuple must be nonempty")
        if len({e.order for e in entries}) != 1:
            raise ValueError("series tuple entries must share one order")
        return super().__new__(cls, entries)

    @property
    def order(self) -> int:
        return self[0].order


def as_exponents(values: Iterable) -> ExponentVector:
    return tuple(as_fraction(v) for v in values)


def unit_decompose(f: TruncatedSeries) -> tuple[Fraction, OnePlusSeries]:
    """Split f = lead * unit with unit in 1 + zQ[[z]]."""
    lead = f.coeffs[0]
    if lead == 0:
        raise NotAUnit("constant term is zero")
    return lead, OnePlusSeries((c / lead for c in f.coeffs), f.order)


def pow_u(g: TruncatedSeries, u) -> OnePlusSeries:
    """g**u = sum_i binom(u, i) (g - 1)**i, exact through the order of g.

    (g - 1)**i starts at z**i, so the first ``order`` terms of the binomial
    series already determine every stored coefficient.
    """
    g = OnePlusSeries.of(g)
    u = as_fraction(u)
    m = g.order
    d = TruncatedSeries((0,) + g.coeffs[1:], m)
    acc = [Fraction(0)] * m
    acc[0] = Fraction(1)
    binom = Fraction(1)
    power = None
    for i in range(1, m):
        binom = binom * (u - (i - 1)) / i
        if binom == 0:
            break
        power = d if power is None else series_mul(power, d)
        for k in range(i, m):
            c = power.coeffs[k]
            if c:
                acc[k] += binom * c
    return OnePlusSeries(acc, m)


def tuple_pow(B: Sequence[TruncatedSeries], u: Sequence) -> OnePlusSeries:
    """prod_j B[j] ** u[j]."""
    if len(B) != len(u):
        raise ValueError(f"tuple of length {len(B)} with exponent vector of length {len(u)}")
    B = SeriesTuple(B)
    out: TruncatedSeries = OnePlusSeries.one(B.order)
    for b, e in zip(B, u):
        e = as_fraction(e)
        if e == 0:
            continue
        out = series_mul(out, b if e == 1 else pow_u(b, e))
    return OnePlusSeries.of(out)
