"""Enumeration of all arithmetical structures on the cycle C_n.

Structures are produced as the images of the multiset bijection ``omega``
over all multisubsets of [n] of size at most n - 1, in order of size and
then lexicographically.  Bijectivity means no deduplication is needed.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterator

from .bijections import canonical_multiset, cycle_d, iter_multisets
from .combinatorics import CountTable
from .core import ArithmeticalError, ArithmeticalStructure, d_from_r, make_graph, validate
from .transforms import rotate

__all__ = [
    "iter_cycle_pairs",
    "enumerate_cycles",
    "census_by_r1_cycle",
    "census_by_dsum_cycle",
    "census_by_d_entry_cycle",
    "census_d_equals_one",
    "census_r_equals_one",
    "census_adjacent_ones",
    "cut_cycle_at_one",
    "cut_cycle_between",
]


def _orbit_id(S: tuple[int, ...], n: int) -> tuple[tuple[int, ...], int]:
    # Reverse-lex first rotation of S, used only as a cache key for the orbit.
    # That rotation always contains 1, so only shifts sending some element
    # to 1 need comparing.
    best = None
    best_key = None
    best_c = 0
    for a in sorted(set(S)):
        i = bisect_left(S, a)
        T = tuple(x - a + 1 for x in S[i:]) + tuple(x - a + 1 + n for x in S[:i])
        key = T[::-1]
        c = (1 - a) % n
        if best is None or key < best_key or (key == best_key and c < best_c):
            best, best_key, best_c = T, key, c
    return best, best_c


def iter_cycle_pairs(
    n: int, r1: int | None = None
) -> Iterator[tuple[tuple[int, ...], ArithmeticalStructure]]:
    """Yield ``(S, omega(S))`` for every multiset S of size < n.

    With ``r1`` given, only the size n - r1 is visited.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    g = make_graph("cycle", n)
    sizes = range(n) if r1 is None else [n - r1] if 1 <= r1 <= n else []
    for size in sizes:
        if size == 0:
            yield (), ArithmeticalStructure(g, (2,) * n, (1,) * n)
            continue
        cache: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
        for S in iter_multisets(n, size):
            M, c = _orbit_id(S, n)
            hit = cache.get(M)
            if hit is None:
                _, c2, rt = canonical_multiset(M, n)
                hit = cache[M] = (c2, rt)
            shift = (c + hit[0]) % n
            r = rotate(hit[1], -shift) if shift else hit[1]
            yield S, ArithmeticalStructure(g, cycle_d(r), r)


def enumerate_cycles(n: int, r1: int | None = None) -> Iterator[ArithmeticalStructure]:
    """Stream every structure on C_n; binom(2n-1, n-1) of them in total."""
    for _, s in iter_cycle_pairs(n, r1):
        yield s


def census_by_r1_cycle(n: int) -> CountTable:
    t = CountTable(n)
    for s in enumerate_cycles(n):
        t.add(s.r.count(1))
    return t


def census_by_dsum_cycle(n: int) -> CountTable:
    t = CountTable(n)
    for s in enumerate_cycles(n):
        t.add(sum(s.d))
    return t


def census_by_d_entry_cycle(n: int, i: int = 1) -> CountTable:
    """Empirical distribution of d_i on C_n.  No closed form is claimed."""
    if not 1 <= i <= n:
        raise ValueError(f"position must lie in [1, {n}]")
    t = CountTable(n)
    for s in enumerate_cycles(n):
        t.add(s.d[i - 1])
    return t


def census_d_equals_one(n: int, i: int = 1) -> int:
    """Number of structures on C_n with d_i = 1.

    Smoothing at i is a bijection onto the structures on C_{n-1}, so this is
    binom(2n - 3, n - 2), not a Catalan number.  The Catalan count C_{n-1}
    belongs to :func:`census_adjacent_ones`.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    return census_by_d_entry_cycle(n, i).rows.get(1, 0)


def census_r_equals_one(n: int, i: int = 1) -> int:
    """Structures on C_n with r_i = 1; these match P_{n+1} one to one, giving C_n."""
    if not 1 <= i <= n:
        raise ValueError(f"position must lie in [1, {n}]")
    return sum(1 for s in enumerate_cycles(n) if s.r[i - 1] == 1)


def census_adjacent_ones(n: int, i: int = 1) -> int:
    """Structures on C_n with r_i = r_{i+1} = 1 (indices mod n); equals C_{n-1}."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= i <= n:
        raise ValueError(f"position must lie in [1, {n}]")
    j = i % n
    return sum(1 for s in enumerate_cycles(n) if s.r[i - 1] == 1 and s.r[j] == 1)


def _r_of(x) -> tuple[int, ...]:
    return x.r if isinstance(x, ArithmeticalStructure) else tuple(x)


def _path(r) -> ArithmeticalStructure:
    g = make_graph("path", len(r))
    return validate(g, d_from_r(g, r), r)


def cut_cycle_at_one(r, j: int) -> ArithmeticalStructure:
    """Open a cycle r-structure at r_j = 1 into a path on n + 1 vertices."""
    r = _r_of(r)
    n = len(r)
    if not 1 <= j <= n:
        raise ValueError(f"position must lie in [1, {n}]")
    if r[j - 1] != 1:
        raise ArithmeticalError(f"r_{j} = {r[j - 1]} != 1", row=j)
    return _path(rotate(r, j - 1) + (1,))


def cut_cycle_between(r, alpha: int, beta: int) -> tuple[ArithmeticalStructure, ArithmeticalStructure]:
    """Split a cycle r-structure at two entries equal to 1 into two paths."""
    r = _r_of(r)
    n = len(r)
    if not 1 <= alpha < beta <= n:
        raise ValueError("need 1 <= alpha < beta <= n")
    for j in (alpha, beta):
        if r[j - 1] != 1:
            raise ArithmeticalError(f"r_{j} = {r[j - 1]} != 1", row=j)
    inner = r[alpha - 1 : beta]
    outer = r[beta - 1 :] + r[:alpha]
    return _path(inner), _path(outer)
