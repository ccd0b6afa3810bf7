import pytest

from arithmetical.bijections import apply_plan
from arithmetical.combinatorics import (
    CountTable,
    aigner_schulze_count,
    ballot,
    catalan,
    dsum_census_closed,
    path_count_refined,
)
from arithmetical.core import ArithmeticalError, validate
from arithmetical.oracle import brute_force_path
from arithmetical.path_enum import (
    SubdivisionPlan,
    census_by_d_entry,
    census_by_dsum,
    census_by_r1,
    d_zero,
    enumerate_paths,
    iter_plans,
    laplacian_path,
    split_at_one,
)


def test_small_lists():
    assert [(s.d, s.r) for s in enumerate_paths(2)] == [((1, 1), (1, 1))]
    assert {s.r for s in enumerate_paths(3)} == {(1, 1, 1), (1, 2, 1)}
    assert {s.r for s in enumerate_paths(4)} == {
        (1, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 2, 3, 1), (1, 3, 2, 1)
    }


def test_order_is_m_then_b():
    got = [s.r for s in enumerate_paths(5)]
    want = []
    for plan in iter_plans(5):
        want.append(apply_plan(plan, 5).r)
    assert got == want
    plans = list(iter_plans(6))
    assert plans == sorted(plans)


@pytest.mark.parametrize("n", range(2, 12))
def test_count_and_validity(n):
    seen = set()
    for s in enumerate_paths(n):
        validate(s.graph, s.d, s.r)
        seen.add(s.r)
    assert len(seen) == catalan(n - 1)


@pytest.mark.parametrize("n", range(2, 10))
def test_matches_oracle(n):
    assert {s.r for s in enumerate_paths(n)} == set(brute_force_path(n))


@pytest.mark.parametrize("n", range(3, 10))
def test_only_laplacian_has_no_interior_one(n):
    hits = [s for s in enumerate_paths(n) if all(x >= 2 for x in s.d[1:-1])]
    assert hits == [laplacian_path(n)]


def test_r1_filter():
    for n in range(2, 9):
        for k in range(0, n + 2):
            got = list(enumerate_paths(n, r1=k))
            assert all(s.r.count(1) == k for s in got)
            assert len(got) == (path_count_refined(n, k) if 1 <= k <= n else 0)


def test_census_by_r1_examples():
    assert census_by_r1(4) == CountTable(4, {2: 2, 3: 2, 4: 1})
    assert census_by_r1(3) == CountTable(3, {2: 1, 3: 1})
    for n in range(2, 10):
        t = census_by_r1(n)
        assert 1 not in t.rows
        assert t == CountTable(n, {k: path_count_refined(n, k) for k in range(1, n + 1)})


def test_census_by_d_entry_examples():
    assert census_by_d_entry(4, 1) == CountTable(4, {1: 2, 2: 2, 3: 1})
    assert census_by_d_entry(4, 1).rows[3] == ballot(2, 0)
    with pytest.raises(ValueError):
        census_by_d_entry(4, 5)


@pytest.mark.parametrize("n", range(2, 9))
def test_d_entry_census_independent_of_position(n):
    tables = [census_by_d_entry(n, i) for i in range(1, n + 1)]
    assert all(t == tables[0] for t in tables)
    assert tables[0] == CountTable(n, {n - k - 1: ballot(n - 2, k) for k in range(0, n - 1)})


@pytest.mark.parametrize("n", range(2, 10))
def test_dsum_census(n):
    t = census_by_dsum(n)
    assert min(t.rows) == 2 * n - 2 and max(t.rows) == max(2 * n - 2, 3 * n - 4)
    assert t == CountTable(n, {k: dsum_census_closed(n, k) for k in range(2 * n - 2, 3 * n - 3)})


def test_d_zero():
    assert d_zero(laplacian_path(6)) == 5
    s = validate(laplacian_path(5).graph, (2, 3, 1, 2, 3), (1, 2, 5, 3, 1))
    assert d_zero(s) == 1 == s.r.count(1) - 1
    assert d_zero(laplacian_path(2)) == 1
    for s in enumerate_paths(8):
        assert d_zero(s) == s.r.count(1) - 1


def test_split_at_one():
    a, b = split_at_one((1, 2, 1, 1), 3)
    assert (a.r, b.r) == ((1, 2, 1), (1, 1))
    a, b = split_at_one((1, 1, 1, 1), 2)
    assert (a.r, b.r) == ((1, 1), (1, 1, 1))
    with pytest.raises(ArithmeticalError):
        split_at_one((1, 2, 3, 1), 2)
    with pytest.raises(ValueError):
        split_at_one((1, 1, 1), 1)


@pytest.mark.parametrize("n", range(3, 9))
def test_split_pieces_valid(n):
    for s in enumerate_paths(n):
        for j in range(2, n):
            if s.r[j - 1] == 1:
                a, b = split_at_one(s, j)
                assert a.r.count(1) + b.r.count(1) == s.r.count(1) + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_aigner_schulze_filter(n):
    for k in range(1, n + 2):
        got = sum(1 for s in enumerate_paths(n + 2, r1=2) if s.d.count(1) == k)
        assert got == aigner_schulze_count(n, k)


def test_plan_is_normal():
    assert SubdivisionPlan(2, (1, 2, 2)).is_normal()
    assert not SubdivisionPlan(2, (2,)).is_normal()
    assert not SubdivisionPlan(3, (2, 1)).is_normal()
