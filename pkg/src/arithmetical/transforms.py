"""Subdivision, smoothing, and the cyclic actions on cycle structures and multisets."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import ArithmeticalError, ArithmeticalStructure, make_graph

__all__ = [
    "OrbitRep",
    "subdivide_path",
    "smooth_path",
    "subdivide_cycle",
    "smooth_cycle",
    "rotate",
    "rotate_structure",
    "rotate_multiset",
    "revlex_key",
    "canonical_orbit_rep",
]


class OrbitRep(NamedTuple):
    """``canonical`` is obtained from the input by applying the action with ``shift``."""

    canonical: object
    shift: int


def _require(s: ArithmeticalStructure, kind: str):
    if s.graph.kind != kind:
        raise ValueError(f"expected a structure on a {kind}, got {s.graph.kind}")


def subdivide_path(s: ArithmeticalStructure, i: int) -> ArithmeticalStructure:
    """Insert a new vertex at position ``i`` (2 <= i <= n) between i-1 and i."""
    _require(s, "path")
    n = s.n
    if not 2 <= i <= n:
        raise ValueError(f"subdivision position must lie in [2, {n}], got {i}")
    d, r = list(s.d), list(s.r)
    d[i - 2] += 1
    d[i - 1] += 1
    d.insert(i - 1, 1)
    r.insert(i - 1, r[i - 2] + r[i - 1])
    return ArithmeticalStructure(make_graph("path", n + 1), tuple(d), tuple(r))


def smooth_path(s: ArithmeticalStructure, i: int) -> ArithmeticalStructure:
    """Remove interior vertex ``i`` with d_i = 1, the inverse of subdivision."""
    _require(s, "path")
    n = s.n
    if n < 3 or not 1 < i < n:
        raise ValueError(f"smoothing position must be interior, got {i} on P_{n}")
    if s.d[i - 1] != 1:
        raise ArithmeticalError(f"cannot smooth at {i}: d_{i} = {s.d[i - 1]} != 1", row=i)
    d, r = list(s.d), list(s.r)
    del d[i - 1]
    del r[i - 1]
    d[i - 2] -= 1
    d[i - 1] -= 1
    return ArithmeticalStructure(make_graph("path", n - 1), tuple(d), tuple(r))


def subdivide_cycle(s: ArithmeticalStructure, i: int) -> ArithmeticalStructure:
    """Insert a vertex at position ``i`` (1 <= i <= n); vertex 0 means vertex n."""
    _require(s, "cycle")
    n = s.n
    if not 1 <= i <= n:
        raise ValueError(f"subdivision position must lie in [1, {n}], got {i}")
    d, r = list(s.d), list(s.r)
    prev = (i - 2) % n
    cur = i - 1
    new_r = r[prev] + r[cur]
    d[prev] += 1
    d[cur] += 1
    d.insert(cur, 1)
    r.insert(cur, new_r)
    return ArithmeticalStructure(make_graph("cycle", n + 1), tuple(d), tuple(r))


def smooth_cycle(s: ArithmeticalStructure, i: int) -> ArithmeticalStructure:
    """Remove vertex ``i`` of a cycle where d_{i-1} > d_i = 1 < d_{i+1}.

    Smoothing C_3 lands on C_2 with its double edge.
    """
    _require(s, "cycle")
    n = s.n
    if n < 3:
        raise ValueError("smoothing needs a cycle with at least 3 vertices")
    if not 1 <= i <= n:
        raise ValueError(f"smoothing position must lie in [1, {n}], got {i}")
    d, r = list(s.d), list(s.r)
    prev, cur, nxt = (i - 2) % n, i - 1, i % n
    if not (d[prev] > 1 and d[cur] == 1 and d[nxt] > 1):
        raise ArithmeticalError(
            f"cannot smooth at {i}: need d_(i-1) > d_i = 1 < d_(i+1), have "
            f"({d[prev]}, {d[cur]}, {d[nxt]})",
            row=i,
        )
    d[prev] -= 1
    d[nxt] -= 1
    del d[cur]
    del r[cur]
    return ArithmeticalStructure(make_graph("cycle", n - 1), tuple(d), tuple(r))


def rotate(v: Sequence, c: int) -> tuple:
    """(v_{c+1}, ..., v_n, v_1, ..., v_c) with c taken mod n."""
    n = len(v)
    c %= n
    return tuple(v[c:]) + tuple(v[:c])


def rotate_structure(s: ArithmeticalStructure, c: int) -> ArithmeticalStructure:
    _require(s, "cycle")
    return ArithmeticalStructure(s.graph, rotate(s.d, c), rotate(s.r, c))


def rotate_multiset(S: Sequence[int], c: int, n: int) -> tuple[int, ...]:
    """Add ``c`` to every element modulo n, representatives in [1, n]; sorted."""
    return tuple(sorted((a + c - 1) % n + 1 for a in S))


def revlex_key(v: Sequence[int]) -> tuple:
    """Sort key for reverse-lex order: compare at the largest differing index."""
    return tuple(reversed(v))


def canonical_orbit_rep(x, n: int | None = None) -> OrbitRep:
    """Reverse-lex first element of the rotation orbit.

    ``x`` is either a cycle structure (rotated by position) or a multiset over
    ``[n]`` (rotated by value; ``n`` is then required).  When several shifts
    give the same canonical element the smallest shift is recorded.
    """
    if isinstance(x, ArithmeticalStructure):
        _require(x, "cycle")
        best_c, best_key = 0, revlex_key(x.r)
        for c in range(1, x.n):
            key = revlex_key(rotate(x.r, c))
            if key < best_key:
                best_c, best_key = c, key
        return OrbitRep(rotate_structure(x, best_c), best_c)
    if n is None:
        raise ValueError("multiset canonicalization needs n")
    S = tuple(sorted(x))
    if any(not 1 <= a <= n for a in S):
        raise ValueError(f"multiset elements must lie in [1, {n}]")
    best_c, best = 0, S
    best_key = revlex_key(S)
    for c in range(1, n):
        T = rotate_multiset(S, c, n)
        key = revlex_key(T)
        if key < best_key:
            best_c, best, best_key = c, T, key
    return OrbitRep(best, best_c)
