from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithmetical.combinatorics import (
    CountTable,
    aigner_schulze_count,
    ballot,
    binomial,
    catalan,
    cycle_count_refined,
    cycle_dsum_census_closed,
    dsum_census_closed,
    multichoose,
    path_count_refined,
)


def lattice_paths_below_diagonal(k, l):
    # Brute force: choose the positions of the l north steps among k + l,
    # keep paths that never have more norths than easts.
    count = 0
    for north in combinations(range(k + l), l):
        east = north_seen = 0
        ok = True
        ns = set(north)
        for step in range(k + l):
            if step in ns:
                north_seen += 1
            else:
                east += 1
            if north_seen > east:
                ok = False
                break
        count += ok
    return count


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_math_comb(n, k):
    assert binomial(n, k) == (comb(n, k) if k <= n else 0)


def test_catalan_values():
    assert [catalan(i) for i in range(6)] == [1, 1, 2, 5, 14, 42]
    assert catalan(13) == 742900


def test_ballot_examples():
    assert ballot(2, 2) == 2
    assert all(ballot(k, 0) == 1 for k in range(10))
    assert ballot(3, 2) == 5
    assert ballot(3, 4) == 0


@pytest.mark.parametrize("k", range(0, 7))
def test_ballot_against_lattice_paths(k):
    for l in range(0, k + 2):
        assert ballot(k, l) == lattice_paths_below_diagonal(k, l)


def test_negative_arguments_raise():
    with pytest.raises(ValueError):
        ballot(-1, 0)
    with pytest.raises(ValueError):
        catalan(-2)
    with pytest.raises(ValueError):
        multichoose(3, -1)


def test_path_count_refined():
    assert path_count_refined(4, 2) == 2
    assert all(path_count_refined(n, 1) == 0 for n in range(2, 12))
    assert path_count_refined(4, 4) == 1
    for n in range(2, 15):
        for k in range(1, n + 1):
            # the explicit form ((k-1)/(n-1)) binom(2n-2-k, n-2)
            assert path_count_refined(n, k) * (n - 1) == (k - 1) * comb(2 * n - 2 - k, n - 2)


def test_cycle_count_refined():
    assert (cycle_count_refined(2, 2), cycle_count_refined(2, 1)) == (1, 2)
    assert all(cycle_count_refined(n, n) == 1 for n in range(2, 12))
    assert cycle_count_refined(3, 1) == 6
    for n in range(2, 15):
        assert cycle_count_refined(n, 1) == n * catalan(n - 1)


def test_dsum_closed():
    assert dsum_census_closed(4, 6) == 1
    assert dsum_census_closed(4, 9) == 0
    assert dsum_census_closed(4, 7) == 2
    for n in range(2, 12):
        support = [t for t in range(0, 4 * n) if dsum_census_closed(n, t)]
        assert support == list(range(2 * n - 2, 3 * n - 3))


def test_aigner_schulze_examples():
    assert aigner_schulze_count(1, 1) == 1
    assert aigner_schulze_count(3, 1) == 4
    assert aigner_schulze_count(2, 2) == 0


@pytest.mark.parametrize("n", range(2, 16))
def test_row_sums(n):
    assert sum(cycle_count_refined(n, k) for k in range(1, n + 1)) == comb(2 * n - 1, n - 1)
    assert sum(path_count_refined(n, k) for k in range(1, n + 1)) == catalan(n - 1)
    assert sum(cycle_dsum_census_closed(n, t) for t in range(4 * n)) == comb(2 * n - 1, n - 1)
    assert sum(multichoose(n, l) for l in range(n)) == comb(2 * n - 1, n - 1)


@pytest.mark.parametrize("n", range(3, 16))
def test_carlitz_convolution(n):
    A = path_count_refined
    # k = 1 would need A(1, 1) = 1 for the one-vertex path, which is out of range
    for k in range(2, n):
        rhs = sum(A(m, 2) * A(n - m + 1, k) for m in range(2, n - k + 2))
        assert A(n, k + 1) == rhs


@pytest.mark.parametrize("n", range(3, 16))
def test_lattice_identity(n):
    for k in range(2, n + 1):
        rhs = sum((z + 1) * catalan(z) * path_count_refined(n - z, k) for z in range(0, n - k + 1))
        assert cycle_count_refined(n, k) == rhs


def test_count_table_equality_ignores_zero_rows():
    a = CountTable(4, {2: 2, 3: 2, 4: 1})
    b = CountTable(4, {1: 0, 2: 2, 3: 2, 4: 1})
    assert a == b and a.total == 5
    a.add(2)
    assert a != b
