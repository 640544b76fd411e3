"""Linear dependence over Q of families of functions.

Two rank backends are provided.  ``rank_exact`` works on rational functions
by row-reducing numerator coefficients over a common denominator and is
ground truth.  ``rank_series`` works on truncated series through Wronskian
determinants; a vanishing truncated Wronskian only proves dependence when a
degree bound for its numerator is known, hence the ``certified`` flag.

Subsets of term indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .exact_arith import RationalFunction, choose_basepoint, poly_gcd, rf_eval, rf_shift
from .power_maps import SeriesTuple, as_exponents, tuple_pow
from .series import PoleAtOrigin, TruncatedSeries, rf_to_series, series_add, series_derive, series_mul


# -- Wronskians ------------------------------------------------------------

def wronskian(fs: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """det(d^i f_j / dz^i), 0 <= i, j < m, exact through order M - (m - 1)."""
    m = len(fs)
    if m == 0:
        raise ValueError("wronskian of an empty family")
    order = min(f.order for f in fs)
    if order < m:
        raise ValueError(f"order {order} too small for a {m}x{m} Wronskian")
    rows = [[f.truncate(order) for f in fs]]
    for _ in range(1, m):
        rows.append([series_derive(s) for s in rows[-1]])

    memo: dict[tuple[int, tuple[int, ...]], TruncatedSeries] = {}

    def minor(i: int, cols: tuple[int, ...]) -> TruncatedSeries:
        # determinant of rows i.. against the given columns, Laplace on row i
        if i == m - 1:
            return rows[i][cols[0]]
        key = (i, cols)
        if key in memo:
            return memo[key]
        acc = None
        for pos, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero():
                continue
            term = series_mul(entry, minor(i + 1, cols[:pos] + cols[pos + 1:]))
            if pos % 2:
                term = -term
            acc = term if acc is None else series_add(acc, term)
        if acc is None:
            acc = TruncatedSeries([], order - (m - 1))
        memo[key] = acc
        return acc

    return minor(0, tuple(range(m))).truncate(order - (m - 1))


def wronskian_degree_bound(fs: Sequence[RationalFunction]) -> int:
    """h**2 * (d + 1) for h functions of degree at most d.

    Bounds the numerator degree of the Wronskian of any subfamily once the
    Wronskian is written over a denominator that does not vanish at 0.
    """
    h = len(fs)
    d = max((max(f.num.degree, f.den.degree, 0) for f in fs), default=0)
    return h * h * (d + 1)


# -- ranks -----------------------------------------------------------------

def _distinct(items: Iterable) -> list:
    out = []
    seen = set()
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def _numerator_matrix(fs: Sequence[RationalFunction]) -> list[list[Fraction]]:
    """Columns are numerator coefficient vectors over a common denominator."""
    common = None
    for f in fs:
        if common is None:
            common = f.den
        else:
            g = poly_gcd(common, f.den)
            common = common * (f.den // g)
    nums = [f.num * (common // f.den) for f in fs]
    length = max((len(p.coeffs) for p in nums), default=0)
    return [[p.coeffs[k] if k < len(p.coeffs) else Fraction(0) for p in nums] for k in range(length)]


def rank_exact(fs: Sequence[RationalFunction]) -> int:
    fs = [f for f in _distinct(fs) if not f.is_zero()]
    if not fs:
        return 0
    return linalg.rank(_numerator_matrix(fs))


def rank_series(fs: Sequence[TruncatedSeries], degree_bound: int | None = None) -> tuple[int, bool]:
    """Wronskian rank of a family of truncated series.

    A greedy pass keeps every series whose Wronskian with the kept ones is
    nonzero.  When the vanishing tests cannot all be certified, larger
    subsets are also tried, so the result is the largest m with some
    m-subset having a nonzero truncated Wronskian.
    """
    fs = _distinct(fs)
    kept: list[TruncatedSeries] = []
    vanished_orders: list[int] = []
    for f in fs:
        w = wronskian(kept + [f])
        if w.is_zero():
            vanished_orders.append(w.order)
        else:
            kept.append(f)
    certified = degree_bound is not None and all(o >= degree_bound + 1 for o in vanished_orders)
    rank = len(kept)
    if not certified:
        for size in range(len(fs), rank, -1):
            if any(not wronskian(list(sub)).is_zero() for sub in combinations(fs, size)):
                rank = size
                break
    return rank, certified


def rank_rational_series(fs: Sequence[RationalFunction], order: int | None = None) -> tuple[int, bool]:
    """Series-backed rank of rational functions with the conservative bound.

    Functions are shifted to a common basepoint first when one of them has a
    pole at 0; the default order is just large enough to certify.
    """
    fs = list(fs)
    if not fs:
        return 0, True
    bound = wronskian_degree_bound(fs)
    if order is None:
        order = bound + len(fs)
    if any(f.den(0) == 0 for f in fs):
        c = choose_basepoint([RationalFunction(f.den) for f in fs])
        fs = [rf_shift(f, c) for f in fs]
    return rank_series([rf_to_series(f, order) for f in fs], bound)


# -- systems ---------------------------------------------------------------

@dataclass(frozen=True)
class SystemInstance:
    """Terms a_i * A_i**u, i < h, with A_i a tuple of r 1-units.

    ``rf_forms`` holds the rational functions behind the series, when known,
    as ``(a_rfs, A_rfs)``; it enables exact ranks at integral exponents.
    """

    a: tuple[TruncatedSeries, ...]
    A: tuple[SeriesTuple, ...]
    rf_forms: tuple[tuple[RationalFunction, ...], tuple[tuple[RationalFunction, ...], ...]] | None = None
    order: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "A", tuple(SeriesTuple(t) for t in self.A))
        if len(self.a) < 2 or len(self.a) != len(self.A):
            raise ValueError("need h >= 2 terms and one tuple per term")
        if len({len(t) for t in self.A}) != 1:
            raise ValueError("all tuples A_i must have the same length r")
        orders = {s.order for s in self.a} | {t.order for t in self.A}
        if len(orders) != 1:
            raise ValueError("all series must share one truncation order")
        if any(s.coeffs[0] == 0 for s in self.a):
            raise ValueError("every a_i must have a nonzero constant term")
        object.__setattr__(self, "order", orders.pop())

    @property
    def h(self) -> int:
        return len(self.a)

    @property
    def r(self) -> int:
        return len(self.A[0])

    @classmethod
    def from_rational(cls, a_rfs: Sequence[RationalFunction], A_rfs: Sequence[Sequence[RationalFunction]],
                      order: int) -> SystemInstance:
        """Expand at z = 0; each A_ij is divided by its value at 0."""
        a_rfs = tuple(a_rfs)
        norm_A = []
        for row in A_rfs:
            norm_row = []
            for f in row:
                c = rf_eval(f, 0)
                if c == 0:
                    raise PoleAtOrigin(f"{f} vanishes at z = 0")
                norm_row.append(f * RationalFunction(1 / c))
            norm_A.append(tuple(norm_row))
        a = tuple(rf_to_series(f, order) for f in a_rfs)
        A = tuple(SeriesTuple(rf_to_series(f, order) for f in row) for row in norm_A)
        return cls(a, A, (a_rfs, tuple(norm_A)))


def _is_integral(u) -> bool:
    return all(Fraction(x).denominator == 1 for x in u)


def system_terms(sys: SystemInstance, u) -> list:
    """The family a_i * A_i**u as rational functions when exact, else series."""
    u = as_exponents(u)
    if len(u) != sys.r:
        raise ValueError(f"exponent vector of length {len(u)} for r = {sys.r}")
    if sys.rf_forms is not None and _is_integral(u):
        a_rfs, A_rfs = sys.rf_forms
        out = []
        for ai, row in zip(a_rfs, A_rfs):
            term = ai
            for f, e in zip(row, u):
                if e:
                    term = term * f ** int(e)
            out.append(term)
        return out
    return [series_mul(ai, tuple_pow(Ai, u)) for ai, Ai in zip(sys.a, sys.A)]


def _family_rank(terms: Sequence) -> int:
    if not terms:
        return 0
    if isinstance(terms[0], RationalFunction):
        return rank_exact(terms)
    return rank_series(terms)[0]


def v_membership(sys: SystemInstance, u, I: Iterable[int], t: int) -> bool:
    """Whether rank{a_i A_i**u : i in I} <= t."""
    I = sorted(set(I))
    if not I:
        raise ValueError("I must be nonempty")
    terms = system_terms(sys, u)
    return _family_rank([terms[i] for i in I]) <= t


def proper_subsets(h: int):
    """Proper nonempty subsets of range(h), smallest first."""
    for size in range(1, h):
        yield from combinations(range(h), size)


def _split_ranks(terms: Sequence) -> tuple[int, list[tuple[tuple[int, ...], int, int]]]:
    h = len(terms)
    total = _family_rank(terms)
    cache: dict[tuple[int, ...], int] = {}

    def rk(idx):
        if idx not in cache:
            cache[idx] = _family_rank([terms[i] for i in idx])
        return cache[idx]

    splits = []
    for I in proper_subsets(h):
        if 0 not in I:
            continue  # I and its complement give the same condition
        comp = tuple(i for i in range(h) if i not in I)
        splits.append((I, rk(I), rk(comp)))
    return total, splits


def s_membership(sys: SystemInstance, u) -> bool:
    """Rank criterion: rank_I + rank_complement > rank_total for all splits."""
    total, splits = _split_ranks(system_terms(sys, u))
    return all(ri + rc > total for _, ri, rc in splits)


# -- relations -------------------------------------------------------------

@dataclass(frozen=True)
class RelationVector:
    """Coefficients of a vanishing sum, first nonzero entry 1."""

    xi: tuple[Fraction, ...]

    def __post_init__(self):
        xi = tuple(Fraction(x) for x in self.xi)
        lead = next((x for x in xi if x), None)
        if lead is None:
            raise ValueError("relation vector must be nonzero")
        object.__setattr__(self, "xi", tuple(x / lead for x in xi))

    def __iter__(self):
        return iter(self.xi)

    def __len__(self):
        return len(self.xi)


def coefficient_columns(fs: Sequence) -> list[list[Fraction]]:
    """Coefficient vectors of the family, one list per function.

    Rational functions go over a common denominator; series are cut to the
    common order.
    """
    if isinstance(fs[0], RationalFunction):
        rows = _numerator_matrix(fs)
        return [[row[i] for row in rows] for i in range(len(fs))]
    order = min(f.order for f in fs)
    return [list(f.coeffs[:order]) for f in fs]


def _combine(cols: Sequence[Sequence[Fraction]], weights: Sequence[Fraction], idx: Iterable[int]) -> list[Fraction]:
    length = len(cols[0])
    out = [Fraction(0)] * length
    for i in idx:
        w = weights[i]
        if w:
            col = cols[i]
            for k in range(length):
                if col[k]:
                    out[k] += w * col[k]
    return out


def find_relation(fs: Sequence) -> RelationVector | None:
    """A vanishing combination with no vanishing proper subsum, if any.

    With W the relation space and W(I) the relations whose I-part vanishes,
    a witness exists iff no W(I) equals W.  Each W(I) that is proper kills
    at most m - 1 of the candidates sum_j t**j b_j, so the sweep over
    t = 1 .. (m-1)(2**h - 2) + 1 always finds one.
    """
    fs = list(fs)
    h = len(fs)
    if h < 2:
        raise ValueError("need at least two functions")
    cols = coefficient_columns(fs)
    matrix = [[cols[i][k] for i in range(h)] for k in range(len(cols[0]))]
    basis = linalg.nullspace(matrix, h)
    if not basis:
        return None
    splits = [I for I in proper_subsets(h) if 0 in I]
    partial = {I: [_combine(cols, b, I) for b in basis] for I in splits}
    for I, vecs in partial.items():
        if not any(any(v) for v in vecs):
            return None
    m = len(basis)
    for t in range(1, (m - 1) * (2 ** h - 2) + 2):
        powers = [Fraction(t) ** j for j in range(m)]
        ok = True
        for vecs in partial.values():
            length = len(vecs[0])
            if not any(sum((p * v[k] for p, v in zip(powers, vecs)), Fraction(0)) for k in range(length)):
                ok = False
                break
        if ok:
            xi = [sum((p * b[i] for p, b in zip(powers, basis)), Fraction(0)) for i in range(h)]
            return RelationVector(tuple(xi))
    raise AssertionError("candidate sweep exhausted; relation space bookkeeping is inconsistent")


def relation_holds(fs: Sequence, xi: Sequence) -> bool:
    """Σ xi_i f_i = 0 and no proper subsum vanishes (checked directly)."""
    fs = list(fs)
    if isinstance(fs[0], RationalFunction):
        def subsum(idx):
            acc = RationalFunction(0)
            for i in idx:
                acc = acc + fs[i] * RationalFunction(xi[i])
            return acc.is_zero()
    else:
        def subsum(idx):
            acc = TruncatedSeries([], min(f.order for f in fs))
            for i in idx:
                acc = series_add(acc, fs[i] * Fraction(xi[i]))
            return acc.is_zero()
    if not subsum(range(len(fs))):
        return False
    return not any(subsum(I) for I in proper_subsets(len(fs)))
