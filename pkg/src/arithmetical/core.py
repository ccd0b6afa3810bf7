"""Graphs and arithmetical structures.

An arithmetical structure on a connected graph ``G`` with adjacency matrix
``A`` is a pair of positive integer vectors ``(d, r)`` with ``r`` primitive
and ``(diag(d) - A) r = 0``.  Vertex positions are 1-based at every public
boundary; tuples are stored 0-based internally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

__all__ = [
    "Graph",
    "ArithmeticalStructure",
    "ArithmeticalError",
    "make_graph",
    "validate",
    "d_from_r",
    "r_ones",
    "to_json",
    "from_json",
    "dumps",
    "loads",
]

KINDS = ("path", "cycle", "star", "general")

# Largest integer a double represents exactly.
_JSON_SAFE = 2**53


class ArithmeticalError(ValueError):
    """Raised when a vector pair fails to be an arithmetical structure.

    ``row`` is the 1-based vertex at which the defining identity (or
    divisibility) first fails, when the failure is row-local.
    """

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


@dataclass(frozen=True, slots=True)
class Graph:
    kind: str
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.n < 1 or len(self.adj) != self.n:
            raise ValueError("adjacency matrix does not match vertex count")
        for i, row in enumerate(self.adj):
            if len(row) != self.n:
                raise ValueError("adjacency matrix is not square")
            if row[i] != 0:
                raise ValueError(f"loop at vertex {i + 1}: loops are not supported")
            for j, a in enumerate(row):
                if a < 0 or a != self.adj[j][i]:
                    raise ValueError("adjacency must be symmetric and nonnegative")
        if not _connected(self.adj):
            raise ValueError("graph is not connected")

    def neighbors(self, i: int) -> list[tuple[int, int]]:
        """(vertex, multiplicity) pairs adjacent to 0-based vertex ``i``."""
        return [(j, a) for j, a in enumerate(self.adj[i]) if a]

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "Graph":
        return cls("general", len(adj), tuple(tuple(int(a) for a in row) for row in adj))


def _connected(adj) -> bool:
    n = len(adj)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, a in enumerate(adj[i]):
            if a and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


@lru_cache(maxsize=None)
def make_graph(kind: str, n: int) -> Graph:
    """Canonical labeled member of a graph family.

    ``n`` is the vertex count for paths and cycles and the number of leaves
    for stars (the center is vertex 1).  ``cycle(2)`` carries a double edge.
    """
    if kind == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        adj = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            adj[i][i + 1] = adj[i + 1][i] = 1
    elif kind == "cycle":
        if n < 2:
            raise ValueError("cycle needs n >= 2")
        adj = [[0] * n for _ in range(n)]
        if n == 2:
            adj[0][1] = adj[1][0] = 2
        else:
            for i in range(n):
                j = (i + 1) % n
                adj[i][j] = adj[j][i] = 1
    elif kind == "star":
        if n < 1:
            raise ValueError("star needs at least one leaf")
        adj = [[0] * (n + 1) for _ in range(n + 1)]
        for i in range(1, n + 1):
            adj[0][i] = adj[i][0] = 1
    else:
        raise ValueError(f"no canonical constructor for kind {kind!r}")
    return Graph(kind, len(adj), tuple(map(tuple, adj)))


@dataclass(frozen=True, slots=True)
class ArithmeticalStructure:
    """A graph with its ``d`` and ``r`` vectors.

    The constructor does not check anything; use :func:`validate` for
    untrusted input.  Enumerators build instances directly.
    """

    graph: Graph
    d: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def r1(self) -> int:
        return self.r.count(1)

    @property
    def dsum(self) -> int:
        return sum(self.d)


def validate(g: Graph, d: Sequence[int], r: Sequence[int]) -> ArithmeticalStructure:
    """Check ``(diag(d) - A) r = 0``, positivity and primitivity.

    Failures are reported for the lowest failing row.
    """
    d = tuple(int(x) for x in d)
    r = tuple(int(x) for x in r)
    if len(d) != g.n or len(r) != g.n:
        raise ArithmeticalError(f"expected vectors of length {g.n}, got {len(d)} and {len(r)}")
    for i in range(g.n):
        if d[i] < 1 or r[i] < 1:
            raise ArithmeticalError(f"nonpositive entry at vertex {i + 1}", row=i + 1)
    for i in range(g.n):
        lhs = d[i] * r[i]
        rhs = sum(a * r[j] for j, a in g.neighbors(i))
        if lhs != rhs:
            raise ArithmeticalError(
                f"identity fails at row {i + 1}: d*r = {lhs} but neighbor sum = {rhs}",
                row=i + 1,
            )
    if gcd(*r) != 1:
        raise ArithmeticalError(f"r is not primitive (gcd {gcd(*r)})")
    return ArithmeticalStructure(g, d, r)


def d_from_r(g: Graph, r: Sequence[int]) -> tuple[int, ...]:
    """Recover the d-vector of an arithmetical r-structure."""
    r = tuple(int(x) for x in r)
    if len(r) != g.n:
        raise ArithmeticalError(f"expected r of length {g.n}")
    if min(r) < 1:
        raise ArithmeticalError("r must be positive")
    if gcd(*r) != 1:
        raise ArithmeticalError(f"r is not primitive (gcd {gcd(*r)})")
    d = []
    for i in range(g.n):
        s = sum(a * r[j] for j, a in g.neighbors(i))
        q, rem = divmod(s, r[i])
        if rem:
            raise ArithmeticalError(
                f"divisibility fails at row {i + 1}: {r[i]} does not divide {s}", row=i + 1
            )
        d.append(q)
    return tuple(d)


def r_ones(s: ArithmeticalStructure) -> int:
    """Number of entries of r equal to 1."""
    return s.r.count(1)


# -- serialization ---------------------------------------------------------


def _enc(x: int):
    return str(x) if abs(x) > _JSON_SAFE else x


def _dec(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(f"expected an integer, got {x!r}")
    return int(x)


def graph_to_json(g: Graph) -> dict:
    obj = {"kind": g.kind, "n": g.n}
    if g.kind == "general":
        obj["adj"] = [list(row) for row in g.adj]
    return obj


def graph_from_json(obj: dict) -> Graph:
    kind = obj.get("kind", "general")
    if kind == "general":
        return Graph.from_adjacency(obj["adj"])
    n = int(obj["n"])
    g = make_graph(kind, n - 1 if kind == "star" else n)
    if "adj" in obj and tuple(map(tuple, obj["adj"])) != g.adj:
        raise ValueError(f"adjacency does not match canonical {kind}({n})")
    return g


def to_json(s: ArithmeticalStructure) -> dict:
    """JSON-ready dict; integers beyond 2**53 become decimal strings.

    For stars, ``n`` is the vertex count (leaves + 1).
    """
    return {
        "graph": graph_to_json(s.graph),
        "d": [_enc(x) for x in s.d],
        "r": [_enc(x) for x in s.r],
    }


def from_json(obj: dict, check: bool = True) -> ArithmeticalStructure:
    g = graph_from_json(obj["graph"])
    d = [_dec(x) for x in obj["d"]]
    r = [_dec(x) for x in obj["r"]]
    if check:
        return validate(g, d, r)
    return ArithmeticalStructure(g, tuple(d), tuple(r))


def dumps(s: ArithmeticalStructure) -> str:
    return json.dumps(to_json(s), separators=(",", ":"))


def loads(text: str, check: bool = True) -> ArithmeticalStructure:
    return from_json(json.loads(text), check=check)
