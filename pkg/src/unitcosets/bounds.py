"""Closed-form coset and subspace counts."""

from __future__ import annotations

from itertools import combinations
from math import comb


class DomainError(ValueError):
    pass


def _check(name: str, value: int, least: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < least:
        raise DomainError(f"{name} must be an integer >= {least}, got {value!r}")


def theorem_bound(n: int, r: int) -> int:
    """sum_{i=2}^{n+1} C(i,2)**r - n + 1 cosets of non-degenerate solutions."""
    _check("n", n, 2)
    _check("r", r, 1)
    return sum(comb(i, 2) ** r for i in range(2, n + 2)) - n + 1


def proposition_bound(h: int, r: int) -> int:
    _check("h", h, 2)
    _check("r", r, 1)
    return sum(comb(p, 2) ** r for p in range(2, h + 1)) - h + 2


def corollary_bound(n: int, r: int) -> int:
    """Proper linear subspaces holding all solutions not in (k*)^n."""
    _check("n", n, 2)
    _check("r", r, 1)
    return sum(comb(i, 2) ** r for i in range(2, n + 2)) + 2 ** n - 2 * n - 1


def degenerate_subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets I of {1..n} with 2 <= |I| <= n-1, lexicographic."""
    _check("n", n, 2)
    return sorted(I for size in range(2, n) for I in combinations(range(1, n + 1), size))
