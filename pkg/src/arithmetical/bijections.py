"""Explicit bijections onto arithmetical structures on paths and cycles.

Paths
    subdivision plans  <->  structures on P_n  <->  ballot words of length n-2
    triangulations of the (n+1)-gon  <->  d-structures on P_n (via quiddity)

Cycles
    multisets over [n] of size < n  <->  structures on C_n  (``omega``)
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .core import ArithmeticalError, ArithmeticalStructure, make_graph, validate
from .path_enum import SubdivisionPlan, laplacian_path
from .transforms import (
    canonical_orbit_rep,
    revlex_key,
    rotate,
    rotate_multiset,
    smooth_path,
    subdivide_path,
)

__all__ = [
    "apply_plan",
    "normalize_plan",
    "plan_from_structure",
    "is_ballot_word",
    "iter_ballot_words",
    "word_encode",
    "word_decode",
    "f_map",
    "f_map_inductive",
    "Triangulation",
    "quiddity",
    "structure_from_triangulation",
    "triangulation_from_structure",
    "rotate_triangulation",
    "omega",
    "omega_canonical",
    "omega_inverse",
    "algorithm_a",
    "algorithm_b",
    "canonical_multiset",
    "cycle_d",
    "fits",
    "iter_multisets",
]


# -- subdivision plans ---------------------------------------------------


def _check_plan(m: int, b: Sequence[int]):
    if m < 2:
        raise ValueError(f"base length must be >= 2, got {m}")
    for i, x in enumerate(b, start=1):
        if not 1 <= x <= m + i - 2:
            raise ValueError(f"b_{i} = {x} outside [1, {m + i - 2}]")


def apply_plan(plan: SubdivisionPlan, n: int | None = None) -> ArithmeticalStructure:
    """Subdivide the Laplacian structure on P_m along the edges b_1, b_2, ..."""
    m, b = plan
    _check_plan(m, b)
    if n is not None and n != m + len(b):
        raise ValueError(f"plan of length {len(b)} from P_{m} does not reach P_{n}")
    s = laplacian_path(m)
    for x in b:
        s = subdivide_path(s, x + 1)
    return s


def normalize_plan(m: int, b: Sequence[int]) -> SubdivisionPlan:
    """Rewrite descents (b_i > b_{i+1}) as (b_{i+1}, b_i + 1) until none remain.

    Each rewrite leaves the resulting structure unchanged.
    """
    _check_plan(m, b)
    b = list(b)
    changed = True
    while changed:
        changed = False
        for i in range(len(b) - 1):
            if b[i] > b[i + 1]:
                b[i], b[i + 1] = b[i + 1], b[i] + 1
                changed = True
    return SubdivisionPlan(m, tuple(b))


def plan_from_structure(s: ArithmeticalStructure) -> SubdivisionPlan:
    """The unique normal plan producing ``s``.

    Smooths at the greatest interior position with d_i = 1 until the
    Laplacian structure remains; the smoothing positions, reversed, are the
    plan (shifted to edge labels).
    """
    if s.graph.kind != "path":
        raise ValueError("plans describe path structures")
    edges = []
    while True:
        interior = [i for i in range(2, s.n) if s.d[i - 1] == 1]
        if not interior:
            break
        i = interior[-1]
        edges.append(i - 1)
        s = smooth_path(s, i)
    if any(x != 1 for x in s.r):
        raise ArithmeticalError("smoothing did not terminate at a Laplacian structure")
    return SubdivisionPlan(s.n, tuple(reversed(edges)))


# -- ballot words --------------------------------------------------------


def is_ballot_word(w: Sequence[int]) -> bool:
    prev = 0
    for j, x in enumerate(w, start=1):
        if not prev <= x <= j:
            return False
        prev = x
    return True


def iter_ballot_words(k: int) -> Iterator[tuple[int, ...]]:
    """All weakly increasing words with 0 <= w_j <= j, lexicographically."""
    w: list[int] = []

    def rec(j, lo):
        if j > k:
            yield tuple(w)
            return
        for x in range(lo, j + 1):
            w.append(x)
            yield from rec(j + 1, x)
            w.pop()

    yield from rec(1, 0)


def word_encode(s: ArithmeticalStructure) -> tuple[int, ...]:
    """m - 2 leading zeros followed by the normal plan's edges."""
    m, b = plan_from_structure(s)
    return (0,) * (m - 2) + b


def word_decode(w: Sequence[int], n: int | None = None) -> ArithmeticalStructure:
    w = tuple(w)
    if not is_ballot_word(w):
        raise ValueError(f"{w} is not a ballot word")
    if n is not None and n != len(w) + 2:
        raise ValueError(f"a word of length {len(w)} encodes a structure on P_{len(w) + 2}")
    z = 0
    while z < len(w) and w[z] == 0:
        z += 1
    return apply_plan(SubdivisionPlan(z + 2, w[z:]))


def f_map(w: Sequence[int]) -> tuple[int, ...]:
    """Ballot-word image of clockwise polygon rotation.

    Add 1 to coordinate j modulo j + 1, then move the zeros to the front.
    """
    bumped = [(x + 1) % (j + 1) for j, x in enumerate(w, start=1)]
    nonzero = [x for x in bumped if x]
    return (0,) * (len(bumped) - len(nonzero)) + tuple(nonzero)


def f_map_inductive(w: Sequence[int]) -> tuple[int, ...]:
    """Same map, built up one coordinate at a time."""
    out: list[int] = []
    for j, x in enumerate(w, start=1):
        if x < j:
            out.append(x + 1)
        else:
            out.insert(0, 0)
    return tuple(out)


# -- triangulations -----------------------------------------------------


class Triangulation:
    """Triangulation of a convex N-gon with vertices 0..N-1 in clockwise order."""

    __slots__ = ("N", "triangles")

    def __init__(self, N: int, triangles):
        tris = frozenset(tuple(sorted(t)) for t in triangles)
        self.N = N
        self.triangles = tris
        self._check()

    def _check(self):
        N = self.N
        if N < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if len(self.triangles) != N - 2:
            raise ValueError(f"expected {N - 2} triangles, got {len(self.triangles)}")
        uses: dict[tuple[int, int], int] = {}
        for t in self.triangles:
            if len(set(t)) != 3 or any(not 0 <= v < N for v in t):
                raise ValueError(f"bad triangle {t}")
            for e in combinations(t, 2):
                uses[e] = uses.get(e, 0) + 1
        for (a, b), k in uses.items():
            boundary = b - a == 1 or (a == 0 and b == N - 1)
            if k != (1 if boundary else 2):
                raise ValueError(f"edge {(a, b)} used by {k} triangles")
        for i in range(N):
            e = (min(i, (i + 1) % N), max(i, (i + 1) % N))
            if e not in uses:
                raise ValueError(f"boundary edge {e} is not covered")
        chords = [e for e in uses if not (e[1] - e[0] == 1 or (e[0] == 0 and e[1] == N - 1))]
        for (a, b), (c, d) in combinations(chords, 2):
            if a < c < b < d or c < a < d < b:
                raise ValueError(f"diagonals {(a, b)} and {(c, d)} cross")

    def __eq__(self, other):
        return isinstance(other, Triangulation) and (self.N, self.triangles) == (
            other.N,
            other.triangles,
        )

    def __hash__(self):
        return hash((self.N, self.triangles))

    def __repr__(self):
        return f"Triangulation({self.N}, {sorted(self.triangles)})"


def quiddity(T: Triangulation) -> tuple[int, ...]:
    """Number of triangles at each vertex, (D_0, ..., D_{N-1})."""
    D = [0] * T.N
    for t in T.triangles:
        for v in t:
            D[v] += 1
    return tuple(D)


def structure_from_triangulation(T: Triangulation) -> ArithmeticalStructure:
    """d = (D_1, ..., D_{N-1}) as a structure on P_{N-1}."""
    d = quiddity(T)[1:]
    return _path_from_d(d)


def _path_from_d(d: Sequence[int]) -> ArithmeticalStructure:
    # r_1 = 1 and r_{i+1} = d_i r_i - r_{i-1} determine r; then validate.
    n = len(d)
    r = [1, d[0]]
    for i in range(1, n - 1):
        r.append(d[i] * r[i] - r[i - 1])
    return validate(make_graph("path", n), d, r)


def triangulation_from_structure(s: ArithmeticalStructure) -> Triangulation:
    """Fan triangulation for the base Laplacian, then one glued ear per subdivision."""
    m, b = plan_from_structure(s)
    tris = [[0, j, j + 1] for j in range(1, m)]
    for x in b:
        p = x + 1  # new vertex sits between vertices p-1 and p
        tris = [[v + 1 if v >= p else v for v in t] for t in tris]
        tris.append([p - 1, p, p + 1])
    return Triangulation(s.n + 1, tris)


def rotate_triangulation(T: Triangulation, c: int = 1) -> Triangulation:
    """Clockwise rotation: vertex v becomes v + c (mod N)."""
    return Triangulation(T.N, [[(v + c) % T.N for v in t] for t in T.triangles])


# -- Algorithms A and B for cycles --------------------------------------
#
# A multiset and all its rotations map to one rotation orbit of structures.
# The representative fed to Algorithm A is the orbit element whose output
# fits on n vertices and is reverse-lex first among its own rotations; that
# element is unique in every orbit, and Algorithm B recovers exactly it.


def iter_multisets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """Sorted multisubsets of [n] of the given size, lexicographically."""
    return combinations_with_replacement(range(1, n + 1), size)


def algorithm_a(S: Sequence[int]) -> list[int]:
    """Labels v_0, v_1, ... built by inserting local maxima at positions S.

    ``S`` must be sorted.  No padding with trailing ones is done here.
    """
    labels = [1]  # labels[j] is vertex v_j; v_0 doubles as v_n
    for s in S:
        cur = len(labels)
        if cur < s:
            labels.extend([1] * (s - cur))
            labels.append(2)
        elif cur == s:
            labels.append(labels[s - 1] + 1)
        else:
            labels.insert(s, labels[s] + labels[s - 1])
    return labels


def fits(S: Sequence[int], n: int) -> bool:
    """Whether Algorithm A on sorted ``S`` stays within n vertices.

    The run ends with max_i(s_i + l - i + 1) vertices (or l + 1), so the
    k-th largest element must not exceed n - k.
    """
    l = len(S)
    return all(S[l - k] <= n - k for k in range(1, l + 1))


def omega_canonical(S: Sequence[int], n: int) -> tuple[int, ...]:
    """Algorithm A on a sorted multiset, padded to (r_1, ..., r_n).

    Position n holds the seed vertex labeled 1.
    """
    if not fits(S, n):
        raise ValueError(f"Algorithm A on {tuple(S)} needs more than {n} vertices")
    labels = algorithm_a(S)
    labels.extend([1] * (n - len(labels)))
    return tuple(labels[1:]) + (labels[0],)


def canonical_multiset(S: Sequence[int], n: int) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    """Representative ``T = rotate_multiset(S, c, n)`` of the rotation orbit of S.

    Returns ``(T, c, r)`` where ``r = omega_canonical(T, n)`` is reverse-lex
    first among its rotations.  The smallest such shift is reported.
    """
    S = tuple(sorted(S))
    best = None
    for c in range(n):
        T = rotate_multiset(S, c, n) if c else S
        if not fits(T, n):
            continue
        r = omega_canonical(T, n)
        key = revlex_key(r)
        if best is None or key < best[0]:
            best = (key, T, c, r)
    if best is None:
        raise ValueError(f"multiset {S} is too large for n = {n}")
    return best[1], best[2], best[3]


def omega(S: Sequence[int], n: int) -> ArithmeticalStructure:
    """Bijection from multisets over [n] of size at most n-1 to Arith(C_n).

    The result has exactly n - |S| entries equal to 1 and satisfies
    ``omega(rotate_multiset(S, t, n), n) == rotate_structure(omega(S, n), t)``.
    """
    S = tuple(sorted(S))
    if n < 2:
        raise ValueError("need n >= 2")
    if len(S) >= n:
        raise ValueError(f"multiset size {len(S)} must be below n = {n}")
    if any(not 1 <= a <= n for a in S):
        raise ValueError(f"multiset elements must lie in [1, {n}]")
    g = make_graph("cycle", n)
    if not S:
        return ArithmeticalStructure(g, (2,) * n, (1,) * n)
    _, c, rt = canonical_multiset(S, n)
    r = rotate(rt, -c)
    return ArithmeticalStructure(g, cycle_d(r), r)


def cycle_d(r: Sequence[int]) -> tuple[int, ...]:
    """d-vector of a cycle r-structure (no divisibility check)."""
    n = len(r)
    return tuple((r[i - 1] + r[(i + 1) % n]) // r[i] for i in range(n))


def algorithm_b(r: Sequence[int]) -> tuple[int, ...]:
    """Peel off the greatest local maximum until only ones remain.

    Returns the removal positions in sorted order.
    """
    r = list(r)
    out = []
    while any(x != 1 for x in r):
        k = len(r)
        for j in range(k, 0, -1):
            if r[j - 1] == r[j - 2] + r[j % k]:
                break
        else:
            raise ArithmeticalError(f"no local maximum in {tuple(r)}")
        out.append(j)
        del r[j - 1]
    return tuple(sorted(out))


def omega_inverse(s: ArithmeticalStructure) -> tuple[int, ...]:
    """Algorithm B on the reverse-lex first rotation, rotated back."""
    if s.graph.kind != "cycle":
        raise ValueError("omega_inverse expects a cycle structure")
    canonical, c = canonical_orbit_rep(s)
    return rotate_multiset(algorithm_b(canonical.r), -c, s.n)
