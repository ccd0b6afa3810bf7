import csv
import io
import json
import subprocess
import sys

import pytest

from arithmetical.cli import run
from arithmetical.core import from_json


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_count_cycles_csv():
    code, out, _ = call(["count", "cycles", "5"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "key", "count"]
    assert sum(int(r["count"]) for r in rows) == 126


@pytest.mark.parametrize("by", ["r1", "dsum", "d-entry"])
def test_count_closed_matches_enumeration(by):
    a = call(["count", "paths", "7", "--by", by, "--format", "json"])[1]
    b = call(["count", "paths", "7", "--by", by, "--closed", "--format", "json"])[1]
    assert json.loads(a) == json.loads(b)


def test_count_cycle_d_entry_has_no_closed_form():
    code, _, err = call(["count", "cycles", "4", "--by", "d-entry", "--closed"])
    assert code == 1 and "closed form" in err


def test_enumerate_paths_2():
    code, out, _ = call(["enumerate", "paths", "2"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["d"] == [1, 1] and rec["r"] == [1, 1] and rec["index"] == 1


def test_enumerate_json_records_are_structures():
    code, out, _ = call(["enumerate", "cycles", "4", "--r1", "2"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert len(recs) == 10
    for rec in recs:
        s = from_json(rec)
        assert s.r.count(1) == rec["r1"] == 2 and sum(s.d) == rec["dsum"]
        assert len(rec["multiset"]) == 2


def test_enumerate_csv_roundtrip():
    _, js, _ = call(["enumerate", "cycles", "4"])
    _, cs, _ = call(["enumerate", "cycles", "4", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(cs)))
    recs = [json.loads(x) for x in js.splitlines()]
    assert list(rows[0]) == ["index", "d", "r", "r1", "dsum", "multiset"]
    for row, rec in zip(rows, recs, strict=True):
        assert [int(x) for x in row["d"].split(";")] == rec["d"]
        assert [int(x) for x in row["r"].split(";")] == rec["r"]
        ms = [int(x) for x in row["multiset"].split(",")] if row["multiset"] else []
        assert ms == rec["multiset"]


def test_enumerate_cache(tmp_path):
    first = call(["enumerate", "paths", "6", "--cache", str(tmp_path)])[1]
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["paths-6.jsonl"]
    header = json.loads(files[0].read_text().splitlines()[0])
    assert header["schema"] == 1 and header["count"] == 42
    assert call(["enumerate", "paths", "6", "--cache", str(tmp_path)])[1] == first
    # a truncated cache file fails the count check and is rebuilt
    text = files[0].read_text().splitlines()
    files[0].write_text("\n".join(text[:10]) + "\n")
    assert call(["enumerate", "paths", "6", "--cache", str(tmp_path)])[1] == first
    assert len(files[0].read_text().splitlines()) == 43


def test_transform():
    s = '{"graph":{"kind":"path","n":2},"d":[1,1],"r":[1,1]}'
    code, out, _ = call(["transform", "--subdivide", "2"], s)
    assert code == 0 and json.loads(out) == {"graph": {"kind": "path", "n": 3}, "d": [2, 1, 2], "r": [1, 2, 1]}
    code, out, _ = call(["transform", "--smooth", "2"], out)
    assert json.loads(out)["d"] == [1, 1]
    c = '{"graph":{"kind":"cycle","n":5},"d":[1,5,1,4,2],"r":[3,1,2,1,2]}'
    code, out, err = call(["transform", "--rotate", "1"], c)
    assert code == 0, err
    assert json.loads(out)["r"] == [1, 2, 1, 2, 3]
    code, _, err = call(["transform", "--smooth", "2"], '{"graph":{"kind":"path","n":3},"d":[1,2,1],"r":[1,1,1]}')
    assert code == 1 and "d_2" in err


def test_bijection_modes():
    p5 = '{"graph":{"kind":"path","n":5},"d":[2,3,1,2,3],"r":[1,2,5,3,1]}'
    assert json.loads(call(["bijection", "plan"], p5)[1]) == {"m": 2, "b": [1, 2, 2]}
    assert json.loads(call(["bijection", "plan"], '{"m":2,"b":[1,2,2]}')[1])["r"] == [1, 2, 5, 3, 1]
    assert json.loads(call(["bijection", "word"], p5)[1]) == {"word": [1, 2, 2]}
    assert json.loads(call(["bijection", "word"], '{"word":[1,2,2]}')[1])["d"] == [2, 3, 1, 2, 3]
    assert json.loads(call(["bijection", "frieze-rotate"], '{"word":[1,2,3]}')[1]) == {"word": [0, 0, 0]}
    back = call(["bijection", "frieze-rotate", "--times", "6"], '{"word":[1,2,3]}')[1]
    assert json.loads(back) == {"word": [1, 2, 3]}
    tri = json.loads(call(["bijection", "triangulation"], p5)[1])
    assert sum(tri["quiddity"]) == 12
    again = call(["bijection", "triangulation"], json.dumps({"N": tri["N"], "triangles": tri["triangles"]}))[1]
    assert json.loads(again)["d"] == [2, 3, 1, 2, 3]
    s = json.loads(call(["bijection", "multiset"], '{"n":6,"multiset":[1,1,3,5]}')[1])
    assert s["r"] == [3, 2, 3, 1, 2, 1]
    assert json.loads(call(["bijection", "multiset"], json.dumps(s))[1]) == {"n": 6, "multiset": [1, 1, 3, 5]}


def test_bijection_rejects_bad_word():
    code, _, err = call(["bijection", "frieze-rotate"], '{"word":[2,1]}')
    assert code == 1 and "ballot" in err


def test_critical_group():
    c3 = '{"graph":{"kind":"cycle","n":3},"d":[2,2,2],"r":[1,1,1]}'
    code, out, _ = call(["critical-group"], c3)
    assert code == 0
    assert json.loads(out) == {"free_rank": 1, "torsion": [3], "group": "Z_3"}
    p = '{"graph":{"kind":"path","n":3},"d":[2,1,2],"r":[1,2,1]}'
    assert json.loads(call(["critical-group"], p)[1])["group"] == "trivial"


def test_exit_codes():
    assert call(["frobnicate"])[0] == 2
    assert call([])[0] == 2
    assert call(["count", "paths"])[0] == 2
    code, _, err = call(["critical-group"], "{not json")
    assert code == 1 and "malformed" in err
    code, _, err = call(["critical-group"], '{"graph":{"kind":"path","n":3},"d":[1,2,1],"r":[2,2,2]}')
    assert code == 1 and "primitive" in err
    code, _, err = call(["critical-group"], '{"graph":{"kind":"path","n":3},"d":[1,3,1],"r":[1,1,1]}')
    assert code == 1 and "row 2" in err
    assert call(["verify", "--only", "nonsense"])[0] == 2


def test_oracle_commands():
    code, out, _ = call(["oracle", "cycles", "3"])
    assert code == 0 and len(out.splitlines()) == 10
    code, out, _ = call(["oracle", "paths", "5", "--format", "csv"])
    assert out.splitlines()[0] == "index,r" and len(out.splitlines()) == 15
    code, out, _ = call(["oracle", "stars", "2"])
    assert [json.loads(x) for x in out.splitlines()] == [{"d0": 2, "leaves": [1, 1]}, {"d0": 1, "leaves": [2, 2]}]


def test_verify_small_and_deterministic():
    args = ["verify", "--max-path", "7", "--max-cycle", "5"]
    code, out, _ = call(args)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and all(x["status"] == "pass" for x in lines)
    assert call(args)[1] == out


def test_verify_only_and_fault(monkeypatch):
    code, out, _ = call(["verify", "--only", "literals,critical-group", "--max-path", "6", "--max-cycle", "5"])
    assert code == 0 and [json.loads(x)["check"] for x in out.splitlines()] == ["literals", "critical-group"]
    monkeypatch.setenv("ARITH_THREADS", "2")
    code, out, _ = call(["verify", "--only", "validate-all", "--inject-fault", "--max-path", "6", "--max-cycle", "5"])
    rec = json.loads(out)
    assert code == 1 and rec["status"] == "fail" and "row 2" in rec["detail"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "arithmetical", "count", "paths", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["n,key,count", "4,2,2", "4,3,2", "4,4,1"]
