import pytest

from unitcosets.bounds import DomainError, corollary_bound, degenerate_subsets, proposition_bound, theorem_bound


def test_theorem_examples():
    assert theorem_bound(2, 1) == 3
    assert theorem_bound(2, 4) == 81
    assert theorem_bound(3, 1) == 8


def test_proposition_examples():
    assert proposition_bound(2, 1) == 1
    assert proposition_bound(3, 1) == 3


def test_corollary_examples():
    assert corollary_bound(2, 1) == 3
    assert corollary_bound(3, 1) == 11
    assert corollary_bound(2, 2) == 9


def test_degenerate_subsets():
    assert degenerate_subsets(3) == [(1, 2), (1, 3), (2, 3)]
    assert degenerate_subsets(2) == []
    assert len(degenerate_subsets(4)) == 10


@pytest.mark.parametrize("bad", [(1, 1), (2, 0), (0, 3), (2, -1)])
def test_domain(bad):
    for fn in (theorem_bound, corollary_bound, proposition_bound):
        with pytest.raises(DomainError):
            fn(*bad)


def test_relations():
    for n in range(2, 9):
        assert len(degenerate_subsets(n)) == 2 ** n - n - 2
        for r in range(1, 7):
            assert corollary_bound(n, r) == theorem_bound(n, r) + len(degenerate_subsets(n))
            assert proposition_bound(n + 1, r) == theorem_bound(n, r)
            assert theorem_bound(n, r + 1) > theorem_bound(n, r)
            assert corollary_bound(n, r + 1) > corollary_bound(n, r)
    for r in range(1, 11):
        assert theorem_bound(2, r) == 3 ** r


def test_big_values_are_exact():
    assert theorem_bound(30, 40) == sum(((i * (i - 1)) // 2) ** 40 for i in range(2, 32)) - 29
