"""Brute-force enumerators that share no code path with the main enumerators.

These search r-vectors directly by divisibility instead of building them from
subdivisions or multisets, so agreement between the two is real evidence.

Entry bound for paths.  Every structure on P_n comes from the all-ones vector
on some P_m by inserting, one at a time, a new entry equal to the sum of its two
neighbours.  Call a vector on P_k good when each entry is at most F_k and each
adjacent pair sums to at most F_{k+1} (F_1 = F_2 = 1).  All-ones on P_m is good
for m >= 2.  Inserting x + y between neighbours x, y of a good vector on P_k
makes an entry x + y <= F_{k+1} and new adjacent sums x + (x + y) and
(x + y) + y, each at most F_{k+1} + F_k = F_{k+2}; the remaining entries and
sums only have their bounds loosened.  So every r on P_n has max(r) <= F_n,
and the DFS below may prune anything larger.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, permutations, product
from math import gcd, lcm
from typing import Iterator, Sequence

from .core import ArithmeticalError, ArithmeticalStructure, Graph, d_from_r, make_graph, validate

__all__ = [
    "fibonacci",
    "SearchResult",
    "brute_force_path",
    "brute_force_cycle",
    "brute_force_general",
    "star_structures",
    "star_structure",
    "star_structures_by_center",
]


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


class SearchResult(frozenset):
    """A set of r-vectors with a note on whether the search was exhaustive."""

    exhaustive: bool = True

    def __new__(cls, items=(), exhaustive: bool = True):
        obj = super().__new__(cls, items)
        obj.exhaustive = exhaustive
        return obj


def _path_sequences(length: int, bound: int) -> Iterator[tuple[int, ...]]:
    # r_1 = 1, r_2 free in [1, bound], then r_{i+1} = k r_i - r_{i-1} for k >= 1.
    if length == 2:
        yield (1, 1)
        return
    r = [1]

    def rec():
        i = len(r)
        if i == length:
            if r[-1] == 1:
                yield tuple(r)
            return
        a, b = r[-2], r[-1]
        if i == length - 1:
            # only r_n = 1 can close the sequence
            if (a + 1) % b == 0:
                r.append(1)
                yield from rec()
                r.pop()
            return
        k = 1
        while True:
            c = k * b - a
            if c > bound:
                break
            if c >= 1:
                r.append(c)
                yield from rec()
                r.pop()
            k += 1

    for second in range(1, bound + 1):
        r.append(second)
        yield from rec()
        r.pop()


def brute_force_path(n: int, bound: int | None = None) -> SearchResult:
    """All r-structures on P_n by divisibility DFS with entries capped at F_n."""
    if n < 2:
        raise ValueError("need n >= 2")
    cap = fibonacci(n) if bound is None else bound
    return SearchResult(_path_sequences(n, cap), exhaustive=bound is None or bound >= fibonacci(n))


def brute_force_cycle(n: int, bound: int | None = None) -> SearchResult:
    """All r-structures on C_n.

    Each one has an entry equal to 1; cutting there gives a path sequence of
    length n + 1 with both ends 1, so entries are at most F_{n+1}.  Every such
    sequence is closed up, all rotations are taken, and the cycle condition is
    re-checked from scratch.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    cap = fibonacci(n + 1) if bound is None else bound
    g = make_graph("cycle", n)
    out = set()
    for seq in _path_sequences(n + 1, cap):
        base = seq[:n]
        for c in range(n):
            r = base[c:] + base[:c]
            if r in out:
                continue
            try:
                d_from_r(g, r)
            except ArithmeticalError:
                continue
            out.add(r)
    return SearchResult(out, exhaustive=bound is None or bound >= fibonacci(n + 1))


def brute_force_general(g: Graph, r_max: int, budget: int = 10**6) -> SearchResult:
    """Every primitive r in [1, r_max]^n satisfying the divisibility conditions.

    Not exhaustive: structures with larger entries are simply not visited.
    """
    if r_max < 1:
        raise ValueError("r_max must be positive")
    if r_max**g.n > budget:
        raise ValueError(f"search space {r_max}^{g.n} exceeds budget {budget}")
    out = set()
    for r in product(range(1, r_max + 1), repeat=g.n):
        if reduce(gcd, r) != 1:
            continue
        if all(sum(a * x for a, x in zip(g.adj[i], r)) % r[i] == 0 for i in range(g.n)):
            out.add(r)
    return SearchResult(out, exhaustive=False)


def _sorted_solutions(n: int, cap: int) -> list[tuple[int, tuple[int, ...]]]:
    # Weakly increasing (d_1..d_n) with sum of 1/d_i a positive integer.
    sols = []
    visited = 0
    for target in range(1, n + 1):
        leaves: list[int] = []

        def rec(rem: Fraction, lo: int):
            nonlocal visited
            visited += 1
            if visited > cap:
                raise ValueError(f"star search exceeded cap {cap}")
            k = n - len(leaves)
            if k == 0:
                if rem == 0:
                    sols.append((target, tuple(leaves)))
                return
            if rem <= 0:
                return
            # the smallest remaining leaf value must satisfy 1/x >= rem/k
            start = max(lo, -(-rem.denominator // rem.numerator))
            stop = (k * rem.denominator) // rem.numerator
            for x in range(start, stop + 1):
                leaves.append(x)
                rec(rem - Fraction(1, x), x)
                leaves.pop()

        rec(Fraction(target), 1)
    return sols


def star_structure(leaves: Sequence[int]) -> ArithmeticalStructure:
    """The structure on the star with leaf d-values ``leaves`` (center is vertex 0)."""
    n = len(leaves)
    total = sum(Fraction(1, x) for x in leaves)
    if total.denominator != 1:
        raise ArithmeticalError(f"sum of 1/d_i is {total}, not an integer", row=1)
    rc = lcm(*leaves)
    r = [rc] + [rc // x for x in leaves]
    g0 = reduce(gcd, r)
    r = [x // g0 for x in r]
    return validate(make_graph("star", n), (int(total),) + tuple(leaves), r)


def star_structures(n: int, cap: int = 10**6) -> list[tuple[int, tuple[int, ...]]]:
    """All (d_0; d_1..d_n) on the star K_{n,1} with the leaves in every order.

    d_0 = sum of 1/d_i, so these are Egyptian fraction representations of the
    integer d_0.  ``cap`` limits the number of search nodes.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    out = set()
    for target, leaves in _sorted_solutions(n, cap):
        for perm in set(permutations(leaves)):
            star_structure(perm)
            out.add((target, perm))
    return sorted(out, key=lambda t: (t[1], t[0]))


def star_structures_by_center(n: int, r_center_max: int) -> list[tuple[int, tuple[int, ...]]]:
    """Unordered star solutions found by a second route: search over r_0.

    Leaf values r_i are divisors of r_0 whose sum is a multiple of r_0.  Only
    solutions with r_0 <= r_center_max are found.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    found = set()
    for rc in range(1, r_center_max + 1):
        divs = [x for x in range(1, rc + 1) if rc % x == 0]
        for combo in combinations_with_replacement(divs, n):
            if sum(combo) % rc or reduce(gcd, combo, rc) != 1:
                continue
            leaves = tuple(sorted(rc // x for x in combo))
            found.add((sum(combo) // rc, leaves))
    return sorted(found, key=lambda t: (t[1], t[0]))

