"""Exact integer linear algebra: generalized Laplacians, Smith normal form, critical groups.

Matrices are plain lists of lists of Python ints, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .core import ArithmeticalError, ArithmeticalStructure, Graph

__all__ = [
    "IntMatrix",
    "SmithForm",
    "AbelianGroup",
    "generalized_laplacian",
    "smith_normal_form",
    "critical_group",
    "matmul",
    "determinant",
]

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors of M, and optionally unimodular U, V with U M V = diag."""

    diag: tuple[int, ...]
    U: Optional[IntMatrix] = None
    V: Optional[IntMatrix] = None

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diag if x)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus the cyclic factors in ``torsion`` (each > 1, dividing the next)."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors out of order: {a} does not divide {b}")
        if any(t <= 1 for t in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    @property
    def order(self) -> int:
        """Order of the torsion part."""
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        # Only the torsion part; that is the critical group.
        if not self.torsion:
            return "trivial"
        return " ⊕ ".join(f"Z_{t}" for t in self.torsion)


def generalized_laplacian(g: Graph, d: Sequence[int]) -> IntMatrix:
    """diag(d) - A."""
    if len(d) != g.n:
        raise ValueError(f"d has length {len(d)}, graph has {g.n} vertices")
    return [[(d[i] if i == j else 0) - g.adj[i][j] for j in range(g.n)] for i in range(g.n)]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def smith_normal_form(M: Sequence[Sequence[int]], transforms: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    Pivots on the smallest nonzero absolute value (ties go to the lowest row,
    then column) and fixes up divisibility as it goes, so the result satisfies
    d_1 | d_2 | ... with zeros last.  With ``transforms`` the unimodular U and V
    are tracked as well.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0 or n == 0 or any(len(row) != n for row in A):
        raise ValueError("matrix must be rectangular and nonempty")
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = abs(A[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            # clear column t and row t below/right of the pivot
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
            best = None
            for i in range(t + 1, m):
                a = abs(A[i][t])
                if a and (best is None or a < best[0]):
                    best = (a, i, "r")
            for j in range(t + 1, n):
                a = abs(A[t][j])
                if a and (best is None or a < best[0]):
                    best = (a, j, "c")
            if best is not None:
                # a remainder is now smaller than the pivot
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            p = A[t][t]
            bad = next(
                (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]

    diag = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(diag, U, V)


def critical_group(g, d: Sequence[int] | None = None) -> AbelianGroup:
    """Cokernel of L(G, d); its torsion part is the critical group.

    Accepts ``(graph, d)`` or a single structure.  Raises when the rank is not
    n - 1, which means d is not an arithmetical d-structure.
    """
    if isinstance(g, ArithmeticalStructure):
        g, d = g.graph, g.d
    if d is None:
        raise ValueError("d is required")
    snf = smith_normal_form(generalized_laplacian(g, d))
    if snf.rank != g.n - 1:
        raise ArithmeticalError(
            f"L(G, d) has rank {snf.rank}, expected {g.n - 1}: d is not arithmetical"
        )
    return AbelianGroup(g.n - snf.rank, tuple(x for x in snf.diag if x > 1))
