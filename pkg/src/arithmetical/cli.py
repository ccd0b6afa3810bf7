"""Command-line front end: ``arith <subcommand> ...``.

Exit codes: 0 success, 1 validation failure or bad input, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import tempfile
from typing import Iterable, Iterator

from . import core
from .algebra import critical_group
from .bijections import (
    Triangulation,
    apply_plan,
    f_map,
    is_ballot_word,
    omega,
    omega_inverse,
    plan_from_structure,
    quiddity,
    structure_from_triangulation,
    triangulation_from_structure,
    word_decode,
    word_encode,
)
from .checks import CHECKS, run_checks, thread_cap
from .combinatorics import (
    CountTable,
    ballot,
    binomial,
    catalan,
    cycle_count_refined,
    cycle_dsum_census_closed,
    dsum_census_closed,
    path_count_refined,
)
from .core import ArithmeticalError, ArithmeticalStructure
from .cycle_enum import census_by_d_entry_cycle, census_by_dsum_cycle, census_by_r1_cycle, iter_cycle_pairs
from .oracle import brute_force_cycle, brute_force_path, star_structures
from .path_enum import SubdivisionPlan, census_by_d_entry, census_by_dsum, census_by_r1, enumerate_paths
from .transforms import rotate_structure, smooth_cycle, smooth_path, subdivide_cycle, subdivide_path

CACHE_SCHEMA = 1


class UsageError(Exception):
    """Bad command line; exit code 2."""


class InputError(Exception):
    """Bad input data; reported on stderr with exit code 1."""


def _emit_json(obj, out):
    out.write(json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n")


def _read_json(stdin):
    text = stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON on stdin: {e}") from None


def _read_structure(stdin) -> ArithmeticalStructure:
    obj = _read_json(stdin)
    try:
        return core.from_json(obj)
    except (KeyError, TypeError) as e:
        raise InputError(f"not a structure object: missing {e}") from None


# -- count -------------------------------------------------------------------


def _count_table(args) -> CountTable:
    n, fam, by = args.n, args.family, args.by
    if by == "d-entry" and not 1 <= args.position <= n:
        raise InputError(f"position must lie in [1, {n}]")
    if args.closed:
        t = CountTable(n)
        if by == "r1":
            f = path_count_refined if fam == "paths" else cycle_count_refined
            for k in range(1, n + 1):
                t.add(k, f(n, k))
        elif by == "dsum":
            f = dsum_census_closed if fam == "paths" else cycle_dsum_census_closed
            for target in range(2 * n - 2, 3 * n + 1):
                t.add(target, f(n, target))
        else:
            if fam == "cycles":
                raise InputError("no closed form for the d-entry census on cycles")
            for k in range(0, n - 1):
                t.add(n - k - 1, ballot(n - 2, k))
        t.rows = {k: v for k, v in t.rows.items() if v}
        return t
    if by == "r1":
        return census_by_r1(n) if fam == "paths" else census_by_r1_cycle(n)
    if by == "dsum":
        return census_by_dsum(n) if fam == "paths" else census_by_dsum_cycle(n)
    if fam == "paths":
        return census_by_d_entry(n, args.position)
    return census_by_d_entry_cycle(n, args.position)


def cmd_count(args, out) -> int:
    t = _count_table(args)
    if args.format == "json":
        _emit_json(
            {
                "family": args.family,
                "n": args.n,
                "key": args.by,
                "rows": {str(k): v for k, v in t.items()},
                "total": t.total,
            },
            out,
        )
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "key", "count"])
        for k, v in t.items():
            w.writerow([args.n, k, v])
    return 0


# -- enumerate ---------------------------------------------------------------


def _records(family: str, n: int, r1: int | None) -> Iterator[dict]:
    if family == "paths":
        it = ((None, s) for s in enumerate_paths(n, r1))
    else:
        it = iter_cycle_pairs(n, r1)
    for i, (S, s) in enumerate(it, start=1):
        rec = {"index": i, **core.to_json(s), "r1": s.r.count(1), "dsum": sum(s.d)}
        if S is not None:
            rec["multiset"] = list(S)
        yield rec


def _expected_count(family: str, n: int, r1: int | None) -> int:
    if family == "paths":
        if r1 is None:
            return catalan(n - 1)
        return path_count_refined(n, r1) if 1 <= r1 <= n else 0
    if r1 is None:
        return binomial(2 * n - 1, n - 1)
    return cycle_count_refined(n, r1) if 1 <= r1 <= n else 0


def _cached_records(cache_dir: str, family: str, n: int, r1: int | None) -> Iterator[dict]:
    name = f"{family}-{n}" + ("" if r1 is None else f"-r1_{r1}") + ".jsonl"
    path = os.path.join(cache_dir, name)
    want = _expected_count(family, n, r1)
    if os.path.exists(path):
        with open(path) as fh:
            header = json.loads(fh.readline() or "{}")
            lines = fh.readlines()
        if header.get("schema") == CACHE_SCHEMA and header.get("count") == want == len(lines):
            for line in lines:
                yield json.loads(line)
            return
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".part")
    with os.fdopen(fd, "w") as fh:
        fh.write(json.dumps({"schema": CACHE_SCHEMA, "family": family, "n": n, "r1": r1, "count": want}) + "\n")
        for rec in _records(family, n, r1):
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
            yield rec
    os.replace(tmp, path)


def _csv_vec(v: Iterable) -> str:
    return ";".join(str(x) for x in v)


def cmd_enumerate(args, out) -> int:
    if args.n < 2:
        raise InputError("need n >= 2")
    if args.cache:
        recs = _cached_records(args.cache, args.family, args.n, args.r1)
    else:
        recs = _records(args.family, args.n, args.r1)
    if args.format == "json":
        for rec in recs:
            _emit_json(rec, out)
        return 0
    w = csv.writer(out, lineterminator="\n")
    cols = ["index", "d", "r", "r1", "dsum"] + (["multiset"] if args.family == "cycles" else [])
    w.writerow(cols)
    for rec in recs:
        row = [rec["index"], _csv_vec(rec["d"]), _csv_vec(rec["r"]), rec["r1"], rec["dsum"]]
        if args.family == "cycles":
            row.append(",".join(str(x) for x in rec["multiset"]))
        w.writerow(row)
    return 0


# -- transform / bijection / critical-group ------------------------------------


def cmd_transform(args, out) -> int:
    s = _read_structure(args.stdin)
    kind = s.graph.kind
    if kind not in ("path", "cycle"):
        raise InputError("transform works on path and cycle structures only")
    if args.subdivide is not None:
        s = (subdivide_path if kind == "path" else subdivide_cycle)(s, args.subdivide)
    elif args.smooth is not None:
        s = (smooth_path if kind == "path" else smooth_cycle)(s, args.smooth)
    else:
        if kind != "cycle":
            raise InputError("--rotate needs a cycle structure")
        s = rotate_structure(s, args.rotate)
    _emit_json(core.to_json(s), out)
    return 0


def _as_int_list(x, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in x):
        raise InputError(f"{what} must be an array of integers")
    return x


def _path_or_error(obj) -> ArithmeticalStructure:
    s = core.from_json(obj)
    if s.graph.kind != "path":
        raise InputError("expected a path structure")
    return s


def cmd_bijection(args, out) -> int:
    obj = _read_json(args.stdin)
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    mode = args.mode
    is_structure = "graph" in obj
    if mode == "plan":
        if is_structure:
            p = plan_from_structure(_path_or_error(obj))
            _emit_json({"m": p.m, "b": list(p.b)}, out)
        else:
            plan = SubdivisionPlan(int(obj["m"]), tuple(_as_int_list(obj.get("b", []), "b")))
            _emit_json(core.to_json(apply_plan(plan, obj.get("n"))), out)
    elif mode == "word":
        if is_structure:
            _emit_json({"word": list(word_encode(_path_or_error(obj)))}, out)
        else:
            w = _as_int_list(obj.get("word"), "word")
            _emit_json(core.to_json(word_decode(w, obj.get("n"))), out)
    elif mode == "frieze-rotate":
        times = args.times
        if is_structure:
            w = word_encode(_path_or_error(obj))
        else:
            w = tuple(_as_int_list(obj.get("word"), "word"))
            if not is_ballot_word(w):
                raise InputError(f"{list(w)} is not a ballot word")
        for _ in range(times % (len(w) + 3)):
            w = f_map(w)
        if is_structure:
            _emit_json(core.to_json(word_decode(w, len(w) + 2)), out)
        else:
            _emit_json({"word": list(w)}, out)
    elif mode == "triangulation":
        if is_structure:
            T = triangulation_from_structure(_path_or_error(obj))
            _emit_json(
                {"N": T.N, "triangles": sorted(map(list, T.triangles)), "quiddity": list(quiddity(T))},
                out,
            )
        else:
            T = Triangulation(int(obj["N"]), [tuple(t) for t in obj["triangles"]])
            _emit_json(core.to_json(structure_from_triangulation(T)), out)
    else:  # multiset
        if is_structure:
            s = core.from_json(obj)
            if s.graph.kind != "cycle":
                raise InputError("expected a cycle structure")
            _emit_json({"n": s.n, "multiset": list(omega_inverse(s))}, out)
        else:
            S = _as_int_list(obj.get("multiset"), "multiset")
            _emit_json(core.to_json(omega(sorted(S), int(obj["n"]))), out)
    return 0


def cmd_critical_group(args, out) -> int:
    s = _read_structure(args.stdin)
    G = critical_group(s)
    _emit_json({"free_rank": G.free_rank, "torsion": list(G.torsion), "group": str(G)}, out)
    return 0


# -- oracle / verify -----------------------------------------------------------


def cmd_oracle(args, out) -> int:
    if args.family == "stars":
        sols = star_structures(args.n, cap=args.bound or 10**6)
        for d0, leaves in sols:
            _emit_json({"d0": d0, "leaves": list(leaves)}, out)
        return 0
    if args.n < 2:
        raise InputError("need n >= 2")
    f = brute_force_path if args.family == "paths" else brute_force_cycle
    vectors = sorted(f(args.n, args.bound))
    if args.format == "json":
        for r in vectors:
            _emit_json({"r": list(r)}, out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "r"])
        for i, r in enumerate(vectors, start=1):
            w.writerow([i, _csv_vec(r)])
    return 0


def cmd_verify(args, out) -> int:
    only = None
    if args.only:
        only = [x.strip() for item in args.only for x in item.split(",") if x.strip()]
        bad = [x for x in only if x not in CHECKS]
        if bad:
            raise UsageError(f"unknown check(s): {', '.join(bad)}; choose from {', '.join(CHECKS)}")
    results = run_checks(args.max_path, args.max_cycle, only, args.inject_fault, thread_cap())
    for r in results:
        _emit_json(r.as_dict(), out)
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arith", description="Arithmetical structures on paths and cycles.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("count", help="census tables as CSV (n,key,count) or JSON")
    c.add_argument("family", choices=["paths", "cycles"])
    c.add_argument("n", type=int)
    c.add_argument("--by", choices=["r1", "dsum", "d-entry"], default="r1")
    c.add_argument("--position", type=int, default=1, help="vertex for --by d-entry (1-based)")
    c.add_argument("--closed", action="store_true", help="use closed formulas instead of enumerating")
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="stream every structure")
    e.add_argument("family", choices=["paths", "cycles"])
    e.add_argument("n", type=int)
    e.add_argument("--r1", type=int, default=None)
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.add_argument("--cache", metavar="DIR", default=None)
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("transform", help="subdivide, smooth or rotate a structure read from stdin")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--subdivide", type=int, metavar="I")
    g.add_argument("--smooth", type=int, metavar="I")
    g.add_argument("--rotate", type=int, metavar="C")
    t.set_defaults(func=cmd_transform)

    b = sub.add_parser("bijection", help="apply one of the bijections to JSON on stdin")
    b.add_argument("mode", choices=["plan", "word", "frieze-rotate", "triangulation", "multiset"])
    b.add_argument("--times", type=int, default=1, help="iterations for frieze-rotate")
    b.set_defaults(func=cmd_bijection)

    k = sub.add_parser("critical-group", help="critical group of a structure on stdin")
    k.set_defaults(func=cmd_critical_group)

    o = sub.add_parser("oracle", help="brute-force enumeration")
    o.add_argument("family", choices=["paths", "cycles", "stars"])
    o.add_argument("n", type=int)
    o.add_argument("--bound", type=int, default=None, help="entry bound (search cap for stars)")
    o.add_argument("--format", choices=["json", "csv"], default="json")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run the theorem checks")
    v.add_argument("--max-path", type=int, default=12)
    v.add_argument("--max-cycle", type=int, default=8)
    v.add_argument("--only", action="append", metavar="CHECK", help="comma-separated check names")
    v.add_argument("--inject-fault", action="store_true", help="corrupt one structure (self-test)")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.stdin = stdin
        return args.func(args, stdout)
    except UsageError as e:
        stderr.write(f"arith: usage error: {e}\n")
        return 2
    except ArithmeticalError as e:
        stderr.write(f"arith: invalid structure: {e}\n")
        return 1
    except (InputError, ValueError, KeyError, TypeError) as e:
        stderr.write(f"arith: {e}\n")
        return 1
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())
