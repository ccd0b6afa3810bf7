import json
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithmetical.core import (
    ArithmeticalError,
    ArithmeticalStructure,
    Graph,
    d_from_r,
    dumps,
    from_json,
    loads,
    make_graph,
    r_ones,
    to_json,
    validate,
)
from arithmetical.cycle_enum import enumerate_cycles
from arithmetical.path_enum import enumerate_paths


def test_make_graph_shapes():
    assert make_graph("path", 2).adj == ((0, 1), (1, 0))
    assert make_graph("cycle", 2).adj == ((0, 2), (2, 0))
    c3 = make_graph("cycle", 3)
    assert all(sum(row) == 2 for row in c3.adj)
    star = make_graph("star", 3)
    assert star.n == 4 and star.adj[0] == (0, 1, 1, 1)
    assert all(star.adj[i] == (1, 0, 0, 0) for i in range(1, 4))


@pytest.mark.parametrize("kind,n", [("path", 1), ("cycle", 1), ("star", 0), ("wheel", 4)])
def test_make_graph_rejects(kind, n):
    with pytest.raises(ValueError):
        make_graph(kind, n)


def test_graph_rejects_loops_asymmetry_disconnected():
    with pytest.raises(ValueError):
        Graph.from_adjacency([[1, 1], [1, 0]])
    with pytest.raises(ValueError):
        Graph.from_adjacency([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        Graph.from_adjacency([[0, 0], [0, 0]])


def test_validate_examples():
    validate(make_graph("path", 3), (1, 2, 1), (1, 1, 1))
    s = validate(make_graph("cycle", 2), (1, 4), (2, 1))
    assert s.r1 == 1
    with pytest.raises(ArithmeticalError, match="primitive"):
        validate(make_graph("path", 3), (1, 2, 1), (2, 2, 2))


def test_validate_reports_lowest_row():
    g = make_graph("path", 4)
    with pytest.raises(ArithmeticalError) as e:
        validate(g, (1, 3, 3, 1), (1, 1, 1, 1))
    assert e.value.row == 2
    with pytest.raises(ArithmeticalError) as e:
        validate(g, (1, 2, 2, 1), (1, 1, 0, 1))
    assert e.value.row == 3
    with pytest.raises(ArithmeticalError):
        validate(g, (1, 2, 1), (1, 1, 1))


def test_d_from_r_examples():
    assert d_from_r(make_graph("cycle", 2), (2, 1)) == (1, 4)
    assert d_from_r(make_graph("path", 5), (1, 2, 5, 3, 1)) == (2, 3, 1, 2, 3)
    with pytest.raises(ArithmeticalError) as e:
        d_from_r(make_graph("path", 3), (1, 3, 1))
    assert e.value.row == 2


def test_r_ones():
    g4 = make_graph("path", 4)
    assert r_ones(validate(g4, (1, 2, 2, 1), (1, 1, 1, 1))) == 4
    assert r_ones(validate(make_graph("path", 5), (2, 3, 1, 2, 3), (1, 2, 5, 3, 1))) == 2
    g6 = make_graph("cycle", 6)
    r = (3, 2, 3, 1, 2, 1)
    assert r_ones(validate(g6, d_from_r(g6, r), r)) == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_path_endpoints_and_isolated_ones(n):
    for s in enumerate_paths(n):
        assert s.r[0] == s.r[-1] == 1
        assert sum(s.d) == 3 * n - 2 - r_ones(s)
        if n >= 3:
            assert not any(s.d[i] == 1 == s.d[i + 1] for i in range(n - 1))


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_isolated_ones(n):
    for s in enumerate_cycles(n):
        assert not any(s.d[i] == 1 == s.d[(i + 1) % n] for i in range(n))
        assert sum(s.d) == 3 * n - r_ones(s)


def test_json_shape_and_big_ints():
    big = 2**60 + 1
    s = ArithmeticalStructure(make_graph("path", 2), (1, big), (big, 1))
    obj = to_json(s)
    assert obj == {"graph": {"kind": "path", "n": 2}, "d": [1, str(big)], "r": [str(big), 1]}
    assert from_json(json.loads(json.dumps(obj)), check=False) == s
    star = validate(make_graph("star", 2), (1, 2, 2), (2, 1, 1))
    assert to_json(star)["graph"]["n"] == 3
    assert loads(dumps(star)) == star


@given(st.lists(st.integers(min_value=1, max_value=2**80), min_size=2, max_size=8))
def test_json_roundtrip_bit_exact(r):
    n = len(r)
    s = ArithmeticalStructure(make_graph("path", n), tuple(reversed(r)), tuple(r))
    text = dumps(s)
    assert loads(text, check=False) == s
    assert dumps(loads(text, check=False)) == text


@given(st.lists(st.integers(min_value=1, max_value=30), min_size=2, max_size=7))
def test_validate_agrees_with_definition(r):
    # an independent restatement of the identity
    g = make_graph("cycle", len(r))
    sums = [sum(a * x for a, x in zip(g.adj[i], r)) for i in range(len(r))]
    ok = all(sums[i] % r[i] == 0 for i in range(len(r))) and gcd(*r) == 1
    if ok:
        s = validate(g, d_from_r(g, r), r)
        assert all(s.d[i] * s.r[i] == sums[i] for i in range(len(r)))
    else:
        with pytest.raises(ArithmeticalError):
            d_from_r(g, r)
