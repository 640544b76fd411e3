"""Brute-force solutions of a_1 x_1 + ... + a_n x_n = 1 over a box of exponents.

The unknowns range over Gamma = (Q*)^n . <g_1, ..., g_r> where each g_j is an
n-tuple of rational functions.  For every integer vector w in [-B, B]^r the
monomial tuple g^w is fixed and the constants xi in x = xi . g^w solve a
linear system over Q, found by matching coefficients.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import linalg
from .bounds import theorem_bound
from .codec import factored_to_json, rf_to_json
from .dependence import SystemInstance, proper_subsets
from .exact_arith import (
    FactoredRationalFunction,
    Polynomial,
    RationalFunction,
    choose_basepoint,
    expand_factored,
    poly_gcd,
    rf_shift,
)


class IndependenceError(ValueError):
    """Generators are multiplicatively dependent modulo constants."""

    def __init__(self, message: str, dependent: Sequence[int] = ()):
        super().__init__(message)
        self.dependent = tuple(dependent)


# -- group rank ------------------------------------------------------------

def coprime_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Pairwise coprime monic polynomials generating every input multiplicatively."""
    basis = []
    for p in polys:
        if p.degree > 0:
            p = p.monic()
            if p not in basis:
                basis.append(p)
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                g = poly_gcd(basis[i], basis[j])
                if g.degree > 0:
                    p, q = basis[i], basis[j]
                    rest = [b for k, b in enumerate(basis) if k not in (i, j)]
                    for piece in (p // g, q // g, g):
                        piece = piece.monic()
                        if piece.degree > 0 and piece not in rest:
                            rest.append(piece)
                    basis = rest
                    changed = True
                    break
            if changed:
                break
    return sorted(basis, key=lambda b: (b.degree, b.coeffs))


def factor_over(p: Polynomial, basis: Sequence[Polynomial]) -> list[int]:
    """Multiplicities of each basis element in the monic part of p."""
    mult = []
    rest = p.monic()
    for b in basis:
        k = 0
        while rest.degree >= b.degree:
            q, r = divmod(rest, b)
            if not r.is_zero():
                break
            rest, k = q, k + 1
        mult.append(k)
    if rest.degree > 0:
        raise ValueError(f"{p} does not factor over the basis")
    return mult


@dataclass(frozen=True)
class GroupSpec:
    """Gamma modulo constants, generated by r n-tuples."""

    n: int
    generators: tuple[tuple[FactoredRationalFunction, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.n < 1:
            raise ValueError("n must be positive")
        if not gens:
            raise ValueError("need at least one generator")
        for j, g in enumerate(gens):
            if len(g) != self.n:
                raise ValueError(f"generator {j + 1} has {len(g)} coordinates, expected {self.n}")

    @property
    def r(self) -> int:
        return len(self.generators)

    def expanded(self) -> tuple[tuple[RationalFunction, ...], ...]:
        return tuple(tuple(expand_factored(c) for c in g) for g in self.generators)


def _exponent_data(g: GroupSpec):
    basis = coprime_basis(p for gen in g.generators for coord in gen for p, _ in coord.factors)
    rows = []
    for gen in g.generators:
        row = []
        for coord in gen:
            col = [0] * len(basis)
            for p, e in coord.factors:
                for k, m in enumerate(factor_over(p, basis)):
                    col[k] += e * m
            row.extend(col)
        rows.append(row)
    return basis, rows


def exponent_matrix(g: GroupSpec) -> list[list[int]]:
    """Rows: generators.  Columns: (basis polynomial, coordinate) pairs."""
    return _exponent_data(g)[1]


def group_rank(g: GroupSpec) -> int:
    rows = exponent_matrix(g)
    if not rows or not rows[0]:
        return 0
    return linalg.rank(rows)


def dependent_generators(g: GroupSpec) -> list[int]:
    """0-based indices of generators lying in the span of earlier ones."""
    rows = exponent_matrix(g)
    out = []
    for j in range(len(rows)):
        if not rows[j] or linalg.rank(rows[: j + 1]) == linalg.rank(rows[:j]):
            out.append(j)
    return out


# -- instances -------------------------------------------------------------

@dataclass(frozen=True)
class EquationInstance:
    group: GroupSpec
    coefficients: tuple[RationalFunction, ...]
    basepoint: Fraction
    truncation: int = 32

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "basepoint", Fraction(self.basepoint))
        if self.group.n < 2:
            raise ValueError("the equation needs n >= 2 unknowns")
        if len(self.coefficients) != self.group.n:
            raise ValueError(f"{len(self.coefficients)} coefficients for n = {self.group.n}")
        if any(a.is_zero() for a in self.coefficients):
            raise ValueError("coefficients must be nonzero")
        c = self.basepoint
        for f in self.all_functions():
            if f.den(c) == 0 or f.num(c) == 0:
                raise ValueError(f"basepoint {c} is a zero or pole of {f}")

    @classmethod
    def build(cls, group: GroupSpec, coefficients: Sequence[RationalFunction], truncation: int = 32) -> EquationInstance:
        fs = list(coefficients) + [f for gen in group.expanded() for f in gen]
        return cls(group, tuple(coefficients), choose_basepoint(fs), truncation)

    @property
    def n(self) -> int:
        return self.group.n

    def all_functions(self) -> list[RationalFunction]:
        return list(self.coefficients) + [f for gen in self.group.expanded() for f in gen]


def independence_check(inst: EquationInstance | GroupSpec) -> bool:
    g = inst.group if isinstance(inst, EquationInstance) else inst
    return group_rank(g) == g.r


def _require_independent(inst: EquationInstance) -> None:
    if not independence_check(inst):
        dep = dependent_generators(inst.group)
        names = ", ".join(f"g{j + 1}" for j in dep)
        raise IndependenceError(
            f"generators are dependent modulo constants (rank {group_rank(inst.group)} < {inst.group.r}); "
            f"dependent: {names}",
            dep,
        )


def instance_digest(inst: EquationInstance) -> str:
    payload = {
        "coefficients": [rf_to_json(a) for a in inst.coefficients],
        "generators": [[factored_to_json(c) for c in g] for g in inst.group.generators],
        "n": inst.n,
    }
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def to_system(inst: EquationInstance, order: int | None = None) -> SystemInstance:
    """The h = n + 1 term system: a_h = -1, A_h = (1, ..., 1), shifted to the basepoint."""
    c = inst.basepoint
    order = order or inst.truncation
    gens = inst.group.expanded()
    a = [rf_shift(f, c) for f in inst.coefficients] + [RationalFunction(-1)]
    A = [tuple(rf_shift(gen[i], c) for gen in gens) for i in range(inst.n)]
    A.append(tuple(RationalFunction(1) for _ in gens))
    return SystemInstance.from_rational(a, A, order)


# -- solutions -------------------------------------------------------------

@dataclass(frozen=True)
class SolutionRecord:
    """x = xi . g^w with a_1 x_1 + ... + a_n x_n = 1.

    ``xi`` is a representative with every entry nonzero.  When the constants
    form a positive-dimensional affine set, ``family`` holds
    (particular point, nullspace basis) and ``xi`` is a member of it.
    """

    exponents: tuple[int, ...]
    xi: tuple[Fraction, ...]
    x: tuple[RationalFunction, ...]
    family: tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]] | None = None

    @property
    def is_family(self) -> bool:
        return self.family is not None

    def monomials(self) -> list[RationalFunction]:
        return [xi_inv * x for xi_inv, x in zip((RationalFunction(1 / c) for c in self.xi), self.x)]


class _Solver:
    """Per-instance caches for the exponent sweep."""

    def __init__(self, inst: EquationInstance):
        self.inst = inst
        self.basis, _ = _exponent_data(inst.group)
        nb = len(self.basis)
        # per generator j, coordinate i: (constant, exponent vector over basis)
        self.gen_data = []
        for gen in inst.group.generators:
            coords = []
            for coord in gen:
                ev = [0] * nb
                for p, e in coord.factors:
                    for k, m in enumerate(factor_over(p, self.basis)):
                        ev[k] += e * m
                coords.append((coord.constant, ev))
            self.gen_data.append(coords)
        self._pow_cache: dict[tuple[int, int], Polynomial] = {}

    def _bpow(self, k: int, e: int) -> Polynomial:
        key = (k, e)
        if key not in self._pow_cache:
            self._pow_cache[key] = self.basis[k] ** e
        return self._pow_cache[key]

    def monomial(self, i: int, w: Sequence[int]) -> RationalFunction:
        const = Fraction(1)
        ev = [0] * len(self.basis)
        for j, wj in enumerate(w):
            if wj:
                c, evj = self.gen_data[j][i]
                const *= c ** wj
                for k, m in enumerate(evj):
                    ev[k] += wj * m
        num = Polynomial((const,))
        den = Polynomial((1,))
        for k, e in enumerate(ev):
            if e > 0:
                num = num * self._bpow(k, e)
            elif e < 0:
                den = den * self._bpow(k, -e)
        return RationalFunction(num, den, _normalized=True)

    def solve(self, w: tuple[int, ...]) -> SolutionRecord | None:
        inst = self.inst
        n = inst.n
        monos = [self.monomial(i, w) for i in range(n)]
        terms = [a * m for a, m in zip(inst.coefficients, monos)]
        # coefficient matching for sum xi_i terms_i = 1 over a common denominator
        common = terms[0].den
        for t in terms[1:]:
            common = common * (t.den // poly_gcd(common, t.den))
        nums = [t.num * (common // t.den) for t in terms]
        length = max(len(common.coeffs), max(len(p.coeffs) for p in nums))
        pad = lambda cs: list(cs) + [Fraction(0)] * (length - len(cs))
        cols = [pad(p.coeffs) for p in nums]
        matrix = [[cols[i][k] for i in range(n)] for k in range(length)]
        sol = linalg.solve(matrix, pad(common.coeffs))
        if sol is None:
            return None
        particular, basis = sol
        for i in range(n):
            if particular[i] == 0 and all(b[i] == 0 for b in basis):
                return None  # xi_i vanishes on the whole solution set
        if not basis:
            xi = tuple(particular)
            family = None
        else:
            xi = _generic_member(particular, basis, cols)
            family = (tuple(particular), tuple(tuple(b) for b in basis))
        x = tuple(RationalFunction(c) * m for c, m in zip(xi, monos))
        return SolutionRecord(tuple(w), xi, x, family)


def _generic_member(particular, basis, cols) -> tuple[Fraction, ...]:
    """First t = 0, 1, 2, ... where particular + sum_j t**(j+1) b_j has no zero
    entry and no vanishing proper subsum that is not identically zero."""
    n = len(particular)
    m = len(basis)
    length = len(cols[0])

    def point(t):
        return [particular[i] + sum((Fraction(t) ** (j + 1) * basis[j][i] for j in range(m)), Fraction(0))
                for i in range(n)]

    def subsum(v, I):
        return [sum((v[i] * cols[i][k] for i in I), Fraction(0)) for k in range(length)]

    live = []
    for I in proper_subsets(n):
        if any(any(subsum(v, I)) for v in [particular] + list(basis)):
            live.append(I)
    limit = m * (n + len(live)) + 1
    for t in range(limit + 1):
        v = point(t)
        if all(v) and all(any(subsum(v, I)) for I in live):
            return tuple(v)
    raise AssertionError("no generic member found within the degree count")


_worker_solver: _Solver | None = None


def _init_worker(inst: EquationInstance) -> None:
    global _worker_solver
    _worker_solver = _Solver(inst)


def _solve_in_worker(w):
    return _worker_solver.solve(w)


def exponent_box(r: int, B: int) -> list[tuple[int, ...]]:
    """[-B, B]^r in lexicographic order."""
    return list(product(range(-B, B + 1), repeat=r))


def enumerate_solutions(inst: EquationInstance, B: int, workers: int = 1) -> list[SolutionRecord]:
    if B < 0:
        raise ValueError("box size must be non-negative")
    _require_independent(inst)
    ws = exponent_box(inst.group.r, B)
    if workers > 1:
        chunk = max(1, len(ws) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(inst,)) as ex:
            found = list(ex.map(_solve_in_worker, ws, chunksize=chunk))
    else:
        solver = _Solver(inst)
        found = [solver.solve(w) for w in ws]
    records = [s for s in found if s is not None]
    records.sort(key=lambda s: s.exponents)
    return records


def check_record(sol: SolutionRecord, inst: EquationInstance) -> bool:
    """Re-verify sum a_i x_i = 1 (and the family directions) from scratch."""
    total = RationalFunction(0)
    for a, x in zip(inst.coefficients, sol.x):
        total = total + a * x
    if total != RationalFunction(1) or any(x.is_zero() for x in sol.x):
        return False
    if sol.family is not None:
        monos = sol.monomials()
        for b in sol.family[1]:
            acc = RationalFunction(0)
            for a, m, c in zip(inst.coefficients, monos, b):
                acc = acc + a * m * RationalFunction(c)
            if not acc.is_zero():
                return False
    return True


def is_nondegenerate(sol: SolutionRecord, inst: EquationInstance) -> bool:
    """No proper subsum of a_i x_i vanishes (identically, for families)."""
    n = inst.n
    if sol.family is None:
        vectors = [sol.xi]
    else:
        vectors = [sol.family[0]] + list(sol.family[1])
    terms = [a * m for a, m in zip(inst.coefficients, sol.monomials())]
    for I in proper_subsets(n):
        nonzero = False
        for v in vectors:
            acc = RationalFunction(0)
            for i in I:
                if v[i]:
                    acc = acc + terms[i] * RationalFunction(v[i])
            if not acc.is_zero():
                nonzero = True
                break
        if not nonzero:
            return False
    return True


# -- cosets ----------------------------------------------------------------

def _scale_free(f: RationalFunction) -> RationalFunction:
    return RationalFunction(f.num.monic(), f.den, _normalized=True)


def same_coset(x: Sequence[RationalFunction], y: Sequence[RationalFunction]) -> bool:
    """x_i / y_i is a constant for every i."""
    return all((xi / yi).is_constant() for xi, yi in zip(x, y))


def coset_classify(sols: Sequence[SolutionRecord]) -> list[list[SolutionRecord]]:
    """Partition by (Q*)^n-coset, classes in order of first appearance.

    Two tuples share a coset iff their coordinates agree after scaling each
    numerator to be monic, which is the constant-ratio test.
    """
    classes: dict[tuple, list[SolutionRecord]] = {}
    for s in sols:
        key = tuple(_scale_free(x) for x in s.x)
        classes.setdefault(key, []).append(s)
    return list(classes.values())


@dataclass(frozen=True)
class CosetEntry:
    w: tuple[int, ...]
    record: SolutionRecord
    nondegenerate: bool


@dataclass(frozen=True)
class CosetReport:
    n: int
    rank: int
    bound: int
    box: int
    digest: str
    cosets: tuple[CosetEntry, ...]

    @property
    def nondegenerate_count(self) -> int:
        return sum(1 for c in self.cosets if c.nondegenerate)

    @property
    def within_bound(self) -> bool:
        return self.nondegenerate_count <= self.bound


def verify_bound(inst: EquationInstance, B: int, workers: int = 1) -> CosetReport:
    sols = enumerate_solutions(inst, B, workers)
    entries = []
    for cls in coset_classify(sols):
        rep = cls[0]
        entries.append(CosetEntry(rep.exponents, rep, is_nondegenerate(rep, inst)))
    entries.sort(key=lambda e: e.w)
    rank = group_rank(inst.group)
    return CosetReport(inst.n, rank, theorem_bound(inst.n, rank), B,
                       instance_digest(inst), tuple(entries))
