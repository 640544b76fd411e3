"""Exact arithmetic over Q, Q[z] and Q(z).

Scalars are :class:`fractions.Fraction`.  Polynomials and rational functions
are immutable and always stored in normal form, so ``==`` and ``hash`` are
structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterable, Sequence


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at one of its poles."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or ``"-p/q"``; U+2212 is accepted as minus."""
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty rational")
    num, slash, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if slash else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_binomial(u, i: int) -> Fraction:
    """Generalized binomial coefficient u(u-1)...(u-i+1)/i!."""
    if i < 0:
        raise ValueError("i must be a natural number")
    u = as_fraction(u)
    out = Fraction(1)
    for k in range(i):
        out = out * (u - k) / (k + 1)
    return out


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [as_fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Polynomial:
    """Element of Q[z], coefficients ascending by degree."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        return poly_str(self)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        if len(rem) - 1 < db:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return Polynomial(quot), Polynomial(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lc = self.lead
        return Polynomial(c / lc for c in self.coeffs)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, c) -> Polynomial:
        """Return p(z + c) via Horner's scheme."""
        c = as_fraction(c)
        if c == 0:
            return self
        lin = Polynomial((c, 1))
        acc = Polynomial()
        for coeff in reversed(self.coeffs):
            acc = acc * lin + coeff
        return acc


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial((x,))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_str(p: Polynomial, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """Element of Q(z) stored as num/den with gcd 1 and den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        num = _as_poly(num) if not isinstance(num, (list, tuple)) else Polynomial(num)
        if den is None:
            den = Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = _as_poly(den) if not isinstance(den, (list, tuple)) else Polynomial(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Polynomial((1,))
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
                lc = den.lead
                if lc != 1:
                    num = Polynomial(c / lc for c in num.coeffs)
                    den = Polynomial(c / lc for c in den.coeffs)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def from_polys(cls, num: Polynomial, den: Polynomial | None = None) -> RationalFunction:
        return cls(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    @property
    def degree(self) -> int:
        """max(deg num, deg den)."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RationalFunction", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        def wrap(p):
            s = str(p)
            return f"({s})" if sum(1 for c in p.coeffs if c) > 1 else s

        return f"{wrap(self.num)}/{wrap(self.den)}"

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        other = _as_rf(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction(Polynomial())
        # cross-cancel first so the products stay small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = (self.num // g1, other.den // g1) if g1.degree > 0 else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2.degree > 0 else (other.num, self.den)
        num, den = n1 * n2, d1 * d2
        lc = den.lead
        if lc != 1:
            num = Polynomial(c / lc for c in num.coeffs)
            den = Polynomial(c / lc for c in den.coeffs)
        return RationalFunction(num, den, _normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_rf(other).inverse()

    def __rtruediv__(self, other):
        return _as_rf(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("rational functions take integer powers only")
        if e < 0:
            return self.inverse() ** (-e)
        # num, den coprime implies num^e, den^e coprime
        return RationalFunction(self.num ** e, self.den ** e, _normalized=True)

    def __call__(self, c) -> Fraction:
        return rf_eval(self, c)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num(0) / self.den(0)


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x))


def rf_eval(f: RationalFunction, c) -> Fraction:
    c = as_fraction(c)
    d = f.den(c)
    if d == 0:
        raise PoleError(f"{f} has a pole at {format_rational(c)}")
    return f.num(c) / d


def rf_shift(f: RationalFunction, c) -> RationalFunction:
    """Return f(z + c)."""
    c = as_fraction(c)
    if c == 0:
        return f
    return RationalFunction(f.num.shift(c), f.den.shift(c))


def basepoint_candidates():
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


def choose_basepoint(fs: Iterable[RationalFunction]) -> Fraction:
    """First candidate where every f is defined and nonzero."""
    fs = list(fs)
    for f in fs:
        if f.is_zero():
            raise ValueError("choose_basepoint needs nonzero functions")
    for c in basepoint_candidates():
        if all(f.num(c) != 0 and f.den(c) != 0 for f in fs):
            return c
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class FactoredRationalFunction:
    """constant * prod(poly ** exp) with monic, pairwise coprime factors."""

    constant: Fraction
    factors: tuple[tuple[Polynomial, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", as_fraction(self.constant))
        object.__setattr__(self, "factors", tuple((p, int(e)) for p, e in self.factors))
        if self.constant == 0:
            raise ValueError("factored rational function needs a nonzero constant")
        polys = []
        for p, e in self.factors:
            if not isinstance(p, Polynomial):
                raise TypeError("factor must be a Polynomial")
            if p.degree < 1:
                raise ValueError(f"factor {p} is constant")
            if p.lead != 1:
                raise ValueError(f"factor {p} is not monic")
            if e == 0:
                raise ValueError(f"factor {p} has exponent 0")
            polys.append(p)
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                if poly_gcd(polys[i], polys[j]).degree > 0:
                    raise ValueError(f"factors {polys[i]} and {polys[j]} are not coprime")


def expand_factored(g: FactoredRationalFunction) -> RationalFunction:
    num = Polynomial((g.constant,))
    den = Polynomial((1,))
    for p, e in g.factors:
        if e > 0:
            num = num * p ** e
        else:
            den = den * p ** (-e)
    # coprime monic factors: already in normal form
    return RationalFunction(num, den, _normalized=True)


def z() -> RationalFunction:
    return RationalFunction(Polynomial((0, 1)))


def rf(num: Sequence, den: Sequence = (1,)) -> RationalFunction:
    """Shorthand constructor from ascending coefficient lists."""
    return RationalFunction(Polynomial(num), Polynomial(den))
