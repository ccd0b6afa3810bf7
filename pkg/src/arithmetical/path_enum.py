"""Enumeration of all arithmetical structures on the path P_n.

Every structure on P_n is the Laplacian structure on some P_m with a
weakly increasing sequence of edge subdivisions applied to it, and distinct
sequences give distinct structures.  The enumerator walks that tree
depth-first, so structures stream out in (m, b)-lexicographic order without
a deduplication pass.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .combinatorics import CountTable
from .core import ArithmeticalError, ArithmeticalStructure, d_from_r, make_graph, validate

__all__ = [
    "SubdivisionPlan",
    "laplacian_path",
    "iter_plans",
    "enumerate_paths",
    "census_by_r1",
    "census_by_d_entry",
    "census_by_dsum",
    "d_zero",
    "split_at_one",
]


class SubdivisionPlan(NamedTuple):
    """Base length ``m`` and 1-based edge sequence ``b`` with
    1 <= b_i <= m + i - 2 and b weakly increasing."""

    m: int
    b: tuple[int, ...]

    def is_normal(self) -> bool:
        prev = 1
        for i, x in enumerate(self.b, start=1):
            if not prev <= x <= self.m + i - 2:
                return False
            prev = x
        return self.m >= 2


def laplacian_path(n: int) -> ArithmeticalStructure:
    d = (1,) + (2,) * (n - 2) + (1,)
    return ArithmeticalStructure(make_graph("path", n), d, (1,) * n)


def iter_plans(n: int, r1: int | None = None) -> Iterator[SubdivisionPlan]:
    """All normal plans for P_n, ordered by m then b lexicographically."""
    ms = range(2, n + 1) if r1 is None else [r1] if 2 <= r1 <= n else []
    for m in ms:
        length = n - m
        b: list[int] = []

        def rec(i: int, lo: int):
            if i > length:
                yield SubdivisionPlan(m, tuple(b))
                return
            for x in range(lo, m + i - 1):
                b.append(x)
                yield from rec(i + 1, x)
                b.pop()

        yield from rec(1, 1)


def enumerate_paths(n: int, r1: int | None = None) -> Iterator[ArithmeticalStructure]:
    """Stream every structure on P_n (optionally only those with r(1) == r1).

    Yields exactly C_{n-1} structures when unfiltered.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    g = make_graph("path", n)
    ms = range(2, n + 1) if r1 is None else [r1] if 2 <= r1 <= n else []
    for m in ms:
        base = laplacian_path(m)
        d = list(base.d)
        r = list(base.r)
        yield from _walk(g, d, r, 1, 1, n - m, m)


def _walk(g, d, r, i, lo, length, m):
    # d, r describe P_{m+i-1}; subdivide edge x (vector position x+1).
    if i > length:
        yield ArithmeticalStructure(g, tuple(d), tuple(r))
        return
    for x in range(lo, m + i - 1):
        d[x - 1] += 1
        d[x] += 1
        d.insert(x, 1)
        r.insert(x, r[x - 1] + r[x])
        yield from _walk(g, d, r, i + 1, x, length, m)
        del d[x]
        del r[x]
        d[x - 1] -= 1
        d[x] -= 1


def census_by_r1(n: int) -> CountTable:
    t = CountTable(n)
    for s in enumerate_paths(n):
        t.add(s.r.count(1))
    return t


def census_by_d_entry(n: int, i: int) -> CountTable:
    """Tally of d_i values over all structures on P_n (i is 1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"position must lie in [1, {n}]")
    t = CountTable(n)
    for s in enumerate_paths(n):
        t.add(s.d[i - 1])
    return t


def census_by_dsum(n: int) -> CountTable:
    t = CountTable(n)
    for s in enumerate_paths(n):
        t.add(sum(s.d))
    return t


def d_zero(s: ArithmeticalStructure) -> int:
    """The virtual entry 3n - 3 - sum(d); equals r(1) - 1 on paths."""
    return 3 * s.n - 3 - sum(s.d)


def split_at_one(r, j: int) -> tuple[ArithmeticalStructure, ArithmeticalStructure]:
    """Cut a path r-structure at an interior entry r_j = 1 into two paths.

    ``r`` may be a structure or a bare r-vector.
    """
    if isinstance(r, ArithmeticalStructure):
        r = r.r
    r = tuple(r)
    n = len(r)
    if not 1 < j < n:
        raise ValueError(f"cut position must be interior, got {j}")
    if r[j - 1] != 1:
        raise ArithmeticalError(f"r_{j} = {r[j - 1]} != 1", row=j)
    return _path_from_r(r[:j]), _path_from_r(r[j - 1 :])


def _path_from_r(r) -> ArithmeticalStructure:
    g = make_graph("path", len(r))
    return validate(g, d_from_r(g, r), r)
