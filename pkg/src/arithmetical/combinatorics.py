"""Closed-form counts: Catalan, ballot and multiset numbers and their refinements.

Everything here is exact integer arithmetic; rational prefactors are applied
only where the division is known to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

__all__ = [
    "CountTable",
    "binomial",
    "catalan",
    "ballot",
    "multichoose",
    "path_count_refined",
    "cycle_count_refined",
    "dsum_census_closed",
    "cycle_dsum_census_closed",
    "aigner_schulze_count",
]


@dataclass
class CountTable:
    """Counts keyed by a refinement value (r(1), a d-entry value, a d-sum...)."""

    n: int
    rows: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def add(self, key: int, amount: int = 1) -> None:
        self.rows[key] = self.rows.get(key, 0) + amount

    def items(self):
        return sorted(self.rows.items())

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        strip = lambda rows: {k: v for k, v in rows.items() if v}
        return self.n == other.n and strip(self.rows) == strip(other.rows)


def _nonneg(*args):
    for a in args:
        if a < 0:
            raise ValueError(f"negative argument {a}")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient via the multiplicative formula, reduced as it goes."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    num, den = 1, 1
    for i in range(1, k + 1):
        num *= n - k + i
        den *= i
        g = gcd(num, den)
        num //= g
        den //= g
    assert den == 1
    return num


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    _nonneg(n)
    return binomial(2 * n, n) // (n + 1)


def ballot(k: int, l: int) -> int:
    """Lattice paths from (0,0) to (k,l) staying weakly below y = x.

    Zero when ``l > k``.
    """
    _nonneg(k, l)
    if l > k:
        return 0
    return (k - l + 1) * binomial(k + l, k) // (k + 1)


def multichoose(n: int, l: int) -> int:
    """Number of multisubsets of size ``l`` of an ``n``-set."""
    _nonneg(n, l)
    if n == 0:
        return 1 if l == 0 else 0
    return binomial(n + l - 1, l)


def path_count_refined(n: int, k: int) -> int:
    """Structures on the path P_n whose r-vector has exactly ``k`` ones."""
    if n < 2 or not 1 <= k <= n:
        raise ValueError("need n >= 2 and 1 <= k <= n")
    return ballot(n - 2, n - k)


def cycle_count_refined(n: int, k: int) -> int:
    """Structures on the cycle C_n whose r-vector has exactly ``k`` ones."""
    if n < 2 or not 1 <= k <= n:
        raise ValueError("need n >= 2 and 1 <= k <= n")
    return binomial(2 * n - k - 1, n - k)


def dsum_census_closed(n: int, target: int) -> int:
    """Path structures on P_n with sum(d) == target."""
    if n < 2:
        raise ValueError("need n >= 2")
    l = target - 2 * n + 2
    if l < 0:
        return 0
    return ballot(n - 2, l)


def cycle_dsum_census_closed(n: int, target: int) -> int:
    """Cycle structures on C_n with sum(d) == target."""
    if n < 2:
        raise ValueError("need n >= 2")
    k = 3 * n - target
    if not 1 <= k <= n:
        return 0
    return cycle_count_refined(n, k)


def aigner_schulze_count(n: int, k: int) -> int:
    """Structures on P_{n+2} with r(1) = 2 and exactly ``k`` entries d_i = 1."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if 2 * k - 2 > n - 1:
        return 0
    return binomial(n - 1, 2 * k - 2) * 2 ** (n + 1 - 2 * k) * catalan(k - 1)
